// Copyright 2026 The bellqfi Authors
// SPDX-License-Identifier: Apache-2.0

// Seeded random states for property batteries.
#pragma once

#include "bellqfi/hilbert.hpp"
#include "bellqfi/models.hpp"

#include <random>
#include <vector>

namespace bellqfi {

using Rng = std::mt19937_64;

inline cplx random_gaussian(Rng& rng) {
    std::normal_distribution<double> g;
    const double re = g(rng);
    const double im = g(rng);
    return {re, im};
}

inline std::vector<cplx> random_complex_set(std::size_t size, Rng& rng) {
    std::vector<cplx> a(size);
    for (cplx& c : a) c = random_gaussian(rng);
    return a;
}

inline PureState random_pure_state(int n_qubits, Rng& rng) {
    PureState s = PureState::unchecked(n_qubits, random_complex_set(hilbert_dim(n_qubits), rng));
    s.normalize();
    return s;
}

inline PureState random_real_state(int n_qubits, Rng& rng) {
    std::normal_distribution<double> g;
    std::vector<cplx> a(hilbert_dim(n_qubits));
    for (cplx& c : a) c = g(rng);
    PureState s = PureState::unchecked(n_qubits, std::move(a));
    s.normalize();
    return s;
}

/// rho = A A^dag / Tr with a d x rank Ginibre matrix A.
inline DensityMatrix random_density_matrix(int n_qubits, int rank, Rng& rng) {
    const auto d = static_cast<Eigen::Index>(hilbert_dim(n_qubits));
    ComplexMatrix a(d, rank);
    for (Eigen::Index j = 0; j < rank; ++j)
        for (Eigen::Index i = 0; i < d; ++i) a(i, j) = random_gaussian(rng);
    ComplexMatrix rho = a * a.adjoint();
    rho /= rho.trace();
    rho = (0.5 * (rho + rho.adjoint())).eval();
    return {n_qubits, std::move(rho)};
}

inline DickeState random_dicke_state(int n_atoms, Rng& rng) {
    std::vector<cplx> a = random_complex_set(static_cast<std::size_t>(n_atoms) + 1, rng);
    double s = 0.0;
    for (const cplx& c : a) s += std::norm(c);
    for (cplx& c : a) c /= std::sqrt(s);
    return {n_atoms, std::move(a)};
}

}  // namespace bellqfi
