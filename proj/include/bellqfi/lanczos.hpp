// Copyright 2026 The bellqfi Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file lanczos.hpp
 * @brief Matrix-free restarted Lanczos for the lowest eigenpair of a real
 *        symmetric operator.
 *
 * Each cycle builds a Krylov basis of at most `krylov_dim` vectors with full
 * re-orthogonalization, extracts the lowest Ritz pair from the tridiagonal
 * projection and restarts from the Ritz vector until the true residual
 * ||A x - theta x|| drops below `residual_tol`.
 */
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bellqfi {

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LanczosOptions {
    int max_iterations = 2000;  ///< total matrix-vector products
    double residual_tol = 1e-10;
    int krylov_dim = 64;
};

struct RealEigenpair {
    double value = 0.0;
    std::vector<double> vector;
    int matvecs = 0;
    double residual = 0.0;
};

namespace detail {

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline void axpy(double alpha, const std::vector<double>& x, std::vector<double>& y) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

inline double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

}  // namespace detail

/// `apply(in, out)` must write A*in into out (same length as `start`).
template <class MatVec>
RealEigenpair lanczos_lowest(MatVec&& apply, std::vector<double> start,
                             const LanczosOptions& opt = {}) {
    const std::size_t dim = start.size();
    if (dim == 0) throw std::invalid_argument("lanczos_lowest: empty start vector");
    double n0 = detail::norm(start);
    if (n0 == 0.0) throw std::invalid_argument("lanczos_lowest: zero start vector");
    for (double& v : start) v /= n0;

    const std::size_t m_max =
        std::min<std::size_t>(dim, static_cast<std::size_t>(std::max(opt.krylov_dim, 2)));
    std::vector<std::vector<double>> basis;
    basis.reserve(m_max);
    std::vector<double> w(dim), x(dim), ax(dim);
    int matvecs = 0;
    double last_residual = 0.0;

    while (true) {
        basis.clear();
        basis.push_back(start);
        std::vector<double> alpha, beta;
        for (std::size_t j = 0; j < m_max; ++j) {
            apply(basis[j], w);
            ++matvecs;
            const double a = detail::dot(basis[j], w);
            alpha.push_back(a);
            // two passes of classical Gram-Schmidt against the whole basis
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& v : basis) detail::axpy(-detail::dot(v, w), v, w);
            const double b = detail::norm(w);
            if (j + 1 == m_max || b < 1e-14 * std::max(1.0, std::abs(a))) break;
            beta.push_back(b);
            for (double& c : w) c /= b;
            basis.push_back(w);
        }

        const auto m = static_cast<Eigen::Index>(alpha.size());
        Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), m);
        Eigen::VectorXd sub(std::max<Eigen::Index>(m - 1, 0));
        for (Eigen::Index i = 0; i + 1 < m; ++i) sub(i) = beta[static_cast<std::size_t>(i)];
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
        tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        const Eigen::VectorXd s = tri.eigenvectors().col(0);

        std::fill(x.begin(), x.end(), 0.0);
        for (Eigen::Index i = 0; i < m; ++i) detail::axpy(s(i), basis[static_cast<std::size_t>(i)], x);
        const double xn = detail::norm(x);
        for (double& c : x) c /= xn;

        apply(x, ax);
        ++matvecs;
        const double theta = detail::dot(x, ax);
        detail::axpy(-theta, x, ax);
        last_residual = detail::norm(ax);
        if (last_residual < opt.residual_tol)
            return {theta, std::move(x), matvecs, last_residual};
        if (matvecs >= opt.max_iterations)
            throw ConvergenceError("lanczos_lowest: residual " + std::to_string(last_residual) +
                                   " after " + std::to_string(matvecs) + " matvecs");
        start = x;
    }
}

}  // namespace bellqfi
