// Copyright 2026 The bellqfi Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file correlators.hpp
 * @brief Many-body Bell correlators E = |Tr[rho R_{S+} L_{S-}]|^2 and the
 *        nonlocality-depth ladder for the full N-party correlator.
 */
#pragma once

#include "bellqfi/hilbert.hpp"

#include <cmath>
#include <stdexcept>

namespace bellqfi {

/// Relative slack for threshold comparisons: a value sitting on a threshold
/// within rounding never counts as exceeding it.
inline constexpr double kThresholdSlack = 1e-12;
/// Absolute tolerance on the 1/4 ceiling of any correlator.
inline constexpr double kCeilingTol = 1e-12;

struct CorrelatorResult {
    double value = 0.0;
    int order = 0;  ///< q = |S+| + |S-|

    /// Local-realism bound 2^-q.
    double bell_limit() const noexcept { return std::ldexp(1.0, -order); }
    /// Separable-state threshold 4^-q.
    double entanglement_threshold() const noexcept { return std::ldexp(1.0, -2 * order); }

    bool exceeds_bell_limit() const noexcept {
        return value > bell_limit() * (1.0 + kThresholdSlack);
    }
    bool exceeds_entanglement_threshold() const noexcept {
        return value > entanglement_threshold() * (1.0 + kThresholdSlack);
    }
};

namespace detail {

/// Tr[rho R L] for a pure state: sum over surviving b of psi[b] conj(psi[b ^ flip]).
inline cplx ladder_trace(const PureState& psi, Mask plus, Mask minus) {
    const Mask flip = plus | minus;
    const Mask free = full_mask(psi.n_qubits()) & ~flip;
    cplx acc = 0.0;
    // enumerate submasks of the untouched qubits; S- bits set, S+ bits clear
    Mask sub = free;
    while (true) {
        const Mask b = sub | minus;
        acc += psi[b] * std::conj(psi[b ^ flip]);
        if (sub == 0) break;
        sub = (sub - 1) & free;
    }
    return acc;
}

inline cplx ladder_trace(const DensityMatrix& rho, Mask plus, Mask minus) {
    const Mask flip = plus | minus;
    const Mask free = full_mask(rho.n_qubits()) & ~flip;
    const ComplexMatrix& m = rho.matrix();
    cplx acc = 0.0;
    Mask sub = free;
    while (true) {
        const Mask b = sub | minus;
        acc += m(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b ^ flip));
        if (sub == 0) break;
        sub = (sub - 1) & free;
    }
    return acc;
}

inline CorrelatorResult make_result(double value, int order) {
    if (value > 0.25 + kCeilingTol && order > 0)
        throw std::logic_error("bell_correlator: value exceeds 1/4");
    return {value, order};
}

}  // namespace detail

/// E_{S+,S-} for a pure state in the generator eigenbasis.
inline CorrelatorResult bell_correlator(const PureState& psi, const CorrelatorSpec& spec) {
    spec.check(psi.n_qubits());
    const cplx t = detail::ladder_trace(psi, spec.plus_mask(), spec.minus_mask());
    return detail::make_result(std::norm(t), spec.order());
}

inline CorrelatorResult bell_correlator(const DensityMatrix& rho, const CorrelatorSpec& spec) {
    spec.check(rho.n_qubits());
    const cplx t = detail::ladder_trace(rho, spec.plus_mask(), spec.minus_mask());
    return detail::make_result(std::norm(t), spec.order());
}

/// Threshold for witnessing depth d with the full N-party correlator:
/// E > 2^-(N - d + 3). d = N gives 1/8, d = 3 gives the local bound 2^-N.
inline double depth_threshold(int depth, int n_qubits) noexcept {
    return std::ldexp(1.0, -(n_qubits - depth + 3));
}

/// Largest d in [3, N] such that the full N-party correlator exceeds
/// 2^-(N-d+3); 0 when the local-realism bound 2^-N is not violated.
inline int nonlocality_depth(double e_value, int n_qubits) {
    if (n_qubits < 1) throw std::invalid_argument("nonlocality_depth: N must be >= 1");
    if (!(e_value >= 0.0) || e_value > 0.25 + kCeilingTol)
        throw std::invalid_argument("nonlocality_depth: correlator outside [0, 1/4]");
    auto above = [&](double thr) { return e_value > thr * (1.0 + kThresholdSlack); };
    if (n_qubits < 3 || !above(std::ldexp(1.0, -n_qubits))) return 0;
    for (int d = n_qubits; d >= 3; --d)
        if (above(depth_threshold(d, n_qubits))) return d;
    return 0;  // unreachable: d = 3 is the local bound
}

}  // namespace bellqfi
