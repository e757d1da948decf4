// Copyright 2026 The bellqfi Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file qfi.hpp
 * @brief Quantum Fisher information and its descending chain of lower bounds
 *        for the collective generator h = 1/2 sum_k xi . sigma^(k).
 *
 * Functions taking a SpinTriad expect states written in the laboratory z
 * basis and rotate them into the xi eigenbasis where needed. Chain:
 *
 *   qfi_spectral >= bound_trace == bound_coherence >= bound_correlator_sum
 */
#pragma once

#include "bellqfi/correlators.hpp"
#include "bellqfi/hilbert.hpp"
#include "bellqfi/parallel.hpp"

#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bellqfi {

/// Eigenpair terms with p_i + p_j below this are dropped from the spectral sum.
inline constexpr double kSpectralCutoff = 1e-12;
/// Largest N for the untruncated correlator-sum bound (4^N trace terms).
inline constexpr int kMaxCorrelatorSumQubits = 14;

namespace detail {

inline bool is_lab_z(const SpinTriad& t) {
    return t.xi()[0] == 0.0 && t.xi()[1] == 0.0 && t.xi()[2] == 1.0;
}

inline std::vector<double> generator_diagonal(int n_qubits) {
    std::vector<double> d(hilbert_dim(n_qubits));
    for (Mask b = 0; b < d.size(); ++b) d[b] = generator_eigenvalue(b, n_qubits);
    return d;
}

/// Probability mass per number of up spins.
inline std::vector<double> up_count_weights(const PureState& psi) {
    std::vector<double> w(static_cast<std::size_t>(psi.n_qubits()) + 1, 0.0);
    for (Mask b = 0; b < psi.dim(); ++b) w[n_up(b)] += std::norm(psi[b]);
    return w;
}

}  // namespace detail

/// Dense h in the laboratory z basis, assembled from single-qubit Pauli
/// matrix elements (sigma_y|up> = i|dn>).
inline ComplexMatrix collective_generator_matrix(int n_qubits, const SpinTriad& triad) {
    if (n_qubits < 1 || n_qubits > kMaxMixedQubits)
        throw std::invalid_argument("collective_generator_matrix: N outside [1, 12]");
    const Vec3& n = triad.xi();
    constexpr cplx I{0.0, 1.0};
    const auto d = static_cast<Eigen::Index>(hilbert_dim(n_qubits));
    ComplexMatrix h = ComplexMatrix::Zero(d, d);
    for (Eigen::Index b = 0; b < d; ++b) {
        for (int k = 0; k < n_qubits; ++k) {
            const Mask bit = Mask{1} << k;
            const bool up = (static_cast<Mask>(b) & bit) != 0;
            h(b, b) += 0.5 * n[2] * (up ? 1.0 : -1.0);
            const auto to = static_cast<Eigen::Index>(static_cast<Mask>(b) ^ bit);
            h(to, b) += 0.5 * (n[0] + n[1] * (up ? I : -I));
        }
    }
    return h;
}

// ============================================================================
// QFI
// ============================================================================

/// F_q = 2 sum_{ij} (p_i - p_j)^2 / (p_i + p_j) |<i|h|j>|^2.
inline double qfi_spectral(const DensityMatrix& rho, const SpinTriad& triad = SpinTriad::z()) {
    const DensityMatrix local = detail::is_lab_z(triad) ? rho : to_frame(rho, triad);
    const Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(local.matrix());
    if (es.info() != Eigen::Success) throw std::runtime_error("qfi_spectral: eigensolver failed");
    const Eigen::VectorXd& p = es.eigenvalues();
    const ComplexMatrix& v = es.eigenvectors();
    const std::vector<double> d = detail::generator_diagonal(rho.n_qubits());
    const Eigen::Map<const Eigen::VectorXd> dv(d.data(), static_cast<Eigen::Index>(d.size()));
    const ComplexMatrix hv = dv.asDiagonal() * v;
    const ComplexMatrix a = v.adjoint() * hv;
    double f = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        for (Eigen::Index j = 0; j < p.size(); ++j) {
            const double s = p(i) + p(j);
            if (s < kSpectralCutoff) continue;
            const double diff = p(i) - p(j);
            f += diff * diff / s * std::norm(a(i, j));
        }
    }
    return 2.0 * f;
}

/// Pure-state QFI 4(<h^2> - <h>^2).
inline double qfi_pure(const PureState& psi, const SpinTriad& triad = SpinTriad::z()) {
    if (detail::is_lab_z(triad)) {
        const std::vector<double> w = detail::up_count_weights(psi);
        double m1 = 0.0, m2 = 0.0;
        for (std::size_t k = 0; k < w.size(); ++k) {
            const double e = static_cast<double>(k) - 0.5 * psi.n_qubits();
            m1 += w[k] * e;
            m2 += w[k] * e * e;
        }
        return 4.0 * (m2 - m1 * m1);
    }
    std::vector<cplx> h(psi.dim(), 0.0);
    for (int k = 0; k < psi.n_qubits(); ++k) {
        const PureState s = pauli_apply(triad.xi(), k, psi);
        for (std::size_t b = 0; b < h.size(); ++b) h[b] += 0.5 * s[b];
    }
    const PureState hpsi = PureState::unchecked(psi.n_qubits(), std::move(h));
    const double mean = inner(psi, hpsi).real();
    return 4.0 * (hpsi.norm_squared() - mean * mean);
}

// ============================================================================
// Lower bounds
// ============================================================================

/// 4 (Tr[rho^2 h^2] - Tr[(rho h)^2]), evaluated with dense matrix products.
inline double bound_trace(const DensityMatrix& rho, const SpinTriad& triad = SpinTriad::z()) {
    const ComplexMatrix h = collective_generator_matrix(rho.n_qubits(), triad);
    const ComplexMatrix& r = rho.matrix();
    const ComplexMatrix rh = r * h;
    const cplx t1 = (r * r * h * h).trace();
    const cplx t2 = (rh * rh).trace();
    return 4.0 * (t1 - t2).real();
}

/// 2 sum_{n,m} (n_up - m_up)^2 |rho_nm|^2 in the xi eigenbasis.
inline double bound_coherence(const DensityMatrix& rho, const SpinTriad& triad = SpinTriad::z()) {
    const DensityMatrix local = detail::is_lab_z(triad) ? rho : to_frame(rho, triad);
    const ComplexMatrix& r = local.matrix();
    double s = 0.0;
    for (Eigen::Index m = 0; m < r.cols(); ++m) {
        const int um = n_up(static_cast<Mask>(m));
        for (Eigen::Index n = 0; n < r.rows(); ++n) {
            const int dn = n_up(static_cast<Mask>(n)) - um;
            s += dn * dn * std::norm(r(n, m));
        }
    }
    return 2.0 * s;
}

/// Pure-state form: |rho_nm|^2 = |psi_n|^2 |psi_m|^2, grouped by up-spin count.
inline double bound_coherence(const PureState& psi, const SpinTriad& triad = SpinTriad::z()) {
    const PureState local = detail::is_lab_z(triad) ? psi : to_frame(psi, triad);
    const std::vector<double> w = detail::up_count_weights(local);
    double s = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        for (std::size_t l = 0; l < w.size(); ++l) {
            const double d = static_cast<double>(k) - static_cast<double>(l);
            s += d * d * w[k] * w[l];
        }
    }
    return 2.0 * s;
}

struct CorrelatorSumOptions {
    /// Keep only correlators with n+ + n- <= max_order. Every dropped term is
    /// non-negative, so the truncated sum is still a valid lower bound.
    std::optional<int> max_order;
    int threads = 1;
};

namespace detail {

/// Sum over all disjoint (S+, S-) with S+ | S- = flip of
/// (n+ - n-)^2 2^-(N-q) E_{S+,S-}. Terms are accumulated in a fixed order.
template <class State>
double correlator_sum_partition(const State& s, Mask flip) {
    const int n = s.n_qubits();
    const int q = n_up(flip);
    const double scale = std::ldexp(1.0, -(n - q));
    double acc = 0.0;
    Mask plus = flip;
    while (true) {
        const int np = n_up(plus);
        const int diff = 2 * np - q;  // n+ - n-
        if (diff != 0) acc += diff * diff * scale * std::norm(ladder_trace(s, plus, flip ^ plus));
        if (plus == 0) break;
        plus = (plus - 1) & flip;
    }
    return acc;
}

template <class State>
double correlator_sum(const State& local, const CorrelatorSumOptions& opt) {
    const int n = local.n_qubits();
    if (!opt.max_order && n > kMaxCorrelatorSumQubits)
        throw std::invalid_argument("bound_correlator_sum: N above 14 requires a max_order cap");
    const std::size_t count = hilbert_dim(n);
    std::vector<double> partial(count, 0.0);
    parallel_for(count, opt.threads, [&](std::size_t flip) {
        if (opt.max_order && n_up(flip) > *opt.max_order) return;
        partial[flip] = correlator_sum_partition(local, static_cast<Mask>(flip));
    });
    double total = 0.0;
    for (double p : partial) total += p;
    return 2.0 * total;
}

}  // namespace detail

/// 2 sum_{n+,n-} (n+ - n-)^2 / 2^(N-n+-n-) sum_{S+,S-} E_{S+,S-}.
/// No operator matrix is materialized: every trace is a submask walk.
inline double bound_correlator_sum(const PureState& psi, const SpinTriad& triad = SpinTriad::z(),
                                   const CorrelatorSumOptions& opt = {}) {
    if (detail::is_lab_z(triad)) return detail::correlator_sum(psi, opt);
    return detail::correlator_sum(to_frame(psi, triad), opt);
}

inline double bound_correlator_sum(const DensityMatrix& rho,
                                   const SpinTriad& triad = SpinTriad::z(),
                                   const CorrelatorSumOptions& opt = {}) {
    if (detail::is_lab_z(triad)) return detail::correlator_sum(rho, opt);
    return detail::correlator_sum(to_frame(rho, triad), opt);
}

struct BoundReport {
    double qfi = 0.0;
    double bound_trace = 0.0;
    double bound_coherence = 0.0;
    std::optional<double> bound_correlator_sum;
    double shot_noise = 0.0;
    double heisenberg = 0.0;
};

inline BoundReport bound_report(const DensityMatrix& rho, const SpinTriad& triad = SpinTriad::z(),
                                const CorrelatorSumOptions& opt = {}) {
    BoundReport r;
    const int n = rho.n_qubits();
    r.qfi = qfi_spectral(rho, triad);
    r.bound_trace = bound_trace(rho, triad);
    r.bound_coherence = bound_coherence(rho, triad);
    if (n <= kMaxCorrelatorSumQubits || opt.max_order)
        r.bound_correlator_sum = bound_correlator_sum(rho, triad, opt);
    r.shot_noise = n;
    r.heisenberg = static_cast<double>(n) * n;
    return r;
}

/// Guaranteed QFI floor N^2 / 2^(m+1) from the full N-party correlator, with
/// m the smallest integer in [0, N-3] such that E > 2^-(m+3); 0 otherwise.
inline double heisenberg_implication(double e_full, int n_qubits) {
    const int depth = nonlocality_depth(e_full, n_qubits);
    if (depth == 0) return 0.0;
    const int m = n_qubits - depth;
    return std::ldexp(static_cast<double>(n_qubits) * n_qubits, -(m + 1));
}

// ============================================================================
// Derivative scan
// ============================================================================

struct SeriesPoint {
    double u = 0.0;
    double value = 0.0;
};

/// dF/d|u| by central differences, one-sided at the ends.
inline std::vector<SeriesPoint> derivative_scan(std::span<const SeriesPoint> series) {
    if (series.size() < 3) throw std::invalid_argument("derivative_scan: need >= 3 points");
    const std::size_t n = series.size();
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = std::abs(series[i].u);
    const bool increasing = x[1] > x[0];
    for (std::size_t i = 1; i < n; ++i) {
        if (!(series[i].u > series[i - 1].u) && !(series[i].u < series[i - 1].u))
            throw std::invalid_argument("derivative_scan: grid is not strictly monotone");
        const double dx = x[i] - x[i - 1];
        if (dx == 0.0 || (dx > 0.0) != increasing)
            throw std::invalid_argument("derivative_scan: degenerate spacing in |u|");
    }
    std::vector<SeriesPoint> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i == 0 ? 0 : i - 1;
        const std::size_t hi = i + 1 == n ? n - 1 : i + 1;
        out[i] = {series[i].u, (series[hi].value - series[lo].value) / (x[hi] - x[lo])};
    }
    return out;
}

}  // namespace bellqfi
