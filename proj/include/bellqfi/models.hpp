// Copyright 2026 The bellqfi Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file models.hpp
 * @brief Ground states of the open transverse-field Ising chain and of the
 *        two-mode collective-spin model, plus permutation-symmetric
 *        (Dicke-subspace) correlators and QFI.
 *
 * Both Hamiltonians commute with the global spin flip and have a
 * non-degenerate, positive ground state in the standard basis, which
 * therefore lies in the even-parity sector. Both ground-state solvers work
 * inside that sector so the exponentially split cat doublet at strong
 * coupling never mixes.
 */
#pragma once

#include "bellqfi/correlators.hpp"
#include "bellqfi/hilbert.hpp"
#include "bellqfi/lanczos.hpp"
#include "bellqfi/parallel.hpp"
#include "bellqfi/qfi.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace bellqfi {

// ============================================================================
// Ising chain:  H = U sum_j sz_j sz_{j+1} - sum_j sx_j   (open boundaries)
// ============================================================================

struct IsingParams {
    int n_qubits = 2;
    double u = 0.0;

    void check() const {
        if (n_qubits < 2 || n_qubits > 20)
            throw std::invalid_argument("IsingParams: N outside [2, 20]");
        if (!std::isfinite(u)) throw std::invalid_argument("IsingParams: coupling is not finite");
    }
};

enum class IsingSolver { automatic, dense, lanczos };

/// Largest N solved densely by IsingSolver::automatic. The even sector has
/// 2^(N-1) states; a dense solve at N = 12 costs ~20 s per point.
inline constexpr int kIsingDenseCutoff = 10;
/// Largest N accepted by IsingSolver::dense.
inline constexpr int kIsingDenseMax = 12;

namespace detail {

/// +U per bond with equal bits, -U per bond with different bits.
inline double ising_diagonal(Mask b, const IsingParams& p) {
    const Mask differ = (b ^ (b >> 1)) & full_mask(p.n_qubits - 1);
    const int bonds = p.n_qubits - 1;
    const int anti = n_up(differ);
    return p.u * (bonds - 2 * anti);
}

}  // namespace detail

inline PureState ising_matvec(const IsingParams& params, const PureState& state) {
    params.check();
    if (state.n_qubits() != params.n_qubits)
        throw std::invalid_argument("ising_matvec: state size does not match N");
    std::vector<cplx> out(state.dim());
    for (Mask b = 0; b < state.dim(); ++b) {
        cplx acc = detail::ising_diagonal(b, params) * state[b];
        for (int j = 0; j < params.n_qubits; ++j) acc -= state[b ^ (Mask{1} << j)];
        out[b] = acc;
    }
    return PureState::unchecked(state.n_qubits(), std::move(out));
}

/// Even-parity sector of the global flip prod_j sx_j. Representatives are
/// the basis indices with the top qubit down; |r>_+ = (|r> + |~r>)/sqrt(2).
class IsingEvenSector {
public:
    explicit IsingEvenSector(const IsingParams& p) : p_(p) {
        p_.check();
        top_ = Mask{1} << (p_.n_qubits - 1);
        full_ = full_mask(p_.n_qubits);
    }

    std::size_t dim() const noexcept { return static_cast<std::size_t>(top_); }

    Mask representative(Mask b) const noexcept { return (b & top_) ? (~b & full_) : b; }

    void apply(const std::vector<double>& in, std::vector<double>& out) const {
        for (Mask r = 0; r < top_; ++r) {
            double acc = detail::ising_diagonal(r, p_) * in[r];
            for (int j = 0; j < p_.n_qubits; ++j) acc -= in[representative(r ^ (Mask{1} << j))];
            out[r] = acc;
        }
    }

    Eigen::MatrixXd dense() const {
        const auto d = static_cast<Eigen::Index>(dim());
        Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
        for (Mask r = 0; r < top_; ++r) {
            const auto c = static_cast<Eigen::Index>(r);
            h(c, c) += detail::ising_diagonal(r, p_);
            for (int j = 0; j < p_.n_qubits; ++j)
                h(static_cast<Eigen::Index>(representative(r ^ (Mask{1} << j))), c) -= 1.0;
        }
        return h;
    }

    PureState expand(const std::vector<double>& v) const {
        std::vector<cplx> a(hilbert_dim(p_.n_qubits));
        const double s = 1.0 / std::sqrt(2.0);
        for (Mask b = 0; b < a.size(); ++b) a[b] = s * v[representative(b)];
        return PureState::unchecked(p_.n_qubits, std::move(a));
    }

private:
    IsingParams p_;
    Mask top_ = 0;
    Mask full_ = 0;
};

namespace detail {

/// Largest-magnitude component made real positive; the first index wins ties.
inline void fix_global_phase(std::vector<cplx>& a) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (std::abs(a[i]) > std::abs(a[best])) best = i;
    if (std::abs(a[best]) == 0.0) return;
    const cplx phase = std::conj(a[best]) / std::abs(a[best]);
    for (cplx& c : a) c *= phase;
    a[best] = std::abs(a[best]);
}

inline void fix_sign(std::vector<double>& v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (std::abs(v[i]) > std::abs(v[best])) best = i;
    if (v[best] < 0)
        for (double& c : v) c = -c;
}

}  // namespace detail

struct IsingGroundState {
    double energy = 0.0;
    PureState state;
};

inline IsingGroundState ising_ground_state(const IsingParams& params,
                                           IsingSolver solver = IsingSolver::automatic,
                                           const LanczosOptions& lanczos = {}) {
    const IsingEvenSector sector(params);
    if (solver == IsingSolver::automatic)
        solver = params.n_qubits <= kIsingDenseCutoff ? IsingSolver::dense : IsingSolver::lanczos;

    std::vector<double> v;
    double energy = 0.0;
    if (solver == IsingSolver::dense) {
        if (params.n_qubits > kIsingDenseMax)
            throw std::invalid_argument("ising_ground_state: dense solver limited to N <= 12");
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sector.dense());
        if (es.info() != Eigen::Success)
            throw ConvergenceError("ising_ground_state: dense eigensolver failed");
        energy = es.eigenvalues()(0);
        const Eigen::VectorXd g = es.eigenvectors().col(0);
        v.assign(g.data(), g.data() + g.size());
    } else {
        // uniform start: positive, so it overlaps the positive ground state
        std::vector<double> start(sector.dim(), 1.0);
        auto res = lanczos_lowest(
            [&](const std::vector<double>& in, std::vector<double>& out) { sector.apply(in, out); },
            std::move(start), lanczos);
        energy = res.value;
        v = std::move(res.vector);
    }
    detail::fix_sign(v);
    PureState psi = sector.expand(v);
    psi.normalize();
    detail::fix_global_phase(psi.amplitudes());
    return {energy, std::move(psi)};
}

/// <psi| prod_j sx_j |psi>
inline double parity_expectation(const PureState& psi) {
    const Mask full = full_mask(psi.n_qubits());
    cplx s = 0.0;
    for (Mask b = 0; b < psi.dim(); ++b) s += std::conj(psi[b ^ full]) * psi[b];
    return s.real();
}

inline double energy_expectation(const IsingParams& params, const PureState& psi) {
    return inner(psi, ising_matvec(params, psi)).real() / psi.norm_squared();
}

// ============================================================================
// Dicke subspace
// ============================================================================

/// Permutation-symmetric state: amplitude k multiplies the normalized Dicke
/// state with k up spins along z.
class DickeState {
public:
    DickeState(int n_atoms, std::vector<cplx> amps) : n_(n_atoms), amps_(std::move(amps)) {
        if (n_atoms < 1) throw std::invalid_argument("DickeState: N must be >= 1");
        if (amps_.size() != static_cast<std::size_t>(n_atoms) + 1)
            throw std::invalid_argument("DickeState: expected N+1 amplitudes");
        double s = 0.0;
        for (const cplx& a : amps_) s += std::norm(a);
        if (std::abs(s - 1.0) > kNormTol)
            throw std::invalid_argument("DickeState: state is not normalized");
    }

    /// (|0> + |N>)/sqrt(2) in the Dicke basis.
    static DickeState ghz(int n_atoms) {
        std::vector<cplx> a(static_cast<std::size_t>(n_atoms) + 1);
        a.front() = a.back() = 1.0 / std::sqrt(2.0);
        return {n_atoms, std::move(a)};
    }

    /// Coherent state along +x: amplitudes sqrt(C(N,k)) / 2^(N/2).
    static DickeState coherent_x(int n_atoms) {
        std::vector<cplx> a(static_cast<std::size_t>(n_atoms) + 1);
        for (int k = 0; k <= n_atoms; ++k) {
            const double lc = std::lgamma(n_atoms + 1.0) - std::lgamma(k + 1.0) -
                              std::lgamma(n_atoms - k + 1.0);
            a[static_cast<std::size_t>(k)] = std::exp(0.5 * lc - 0.5 * n_atoms * std::log(2.0));
        }
        double s = 0.0;
        for (const cplx& c : a) s += std::norm(c);
        for (cplx& c : a) c /= std::sqrt(s);
        return {n_atoms, std::move(a)};
    }

    int n_atoms() const noexcept { return n_; }
    const std::vector<cplx>& amplitudes() const noexcept { return amps_; }
    cplx operator[](std::size_t k) const noexcept { return amps_[k]; }

private:
    int n_;
    std::vector<cplx> amps_;
};

namespace detail {

/// log C(n, k) from a table of log-factorials.
class LogBinomial {
public:
    explicit LogBinomial(int n_max) : lf_(static_cast<std::size_t>(n_max) + 1, 0.0) {
        for (int i = 1; i <= n_max; ++i)
            lf_[static_cast<std::size_t>(i)] = lf_[static_cast<std::size_t>(i - 1)] + std::log(i);
    }
    double operator()(int n, int k) const {
        return lf_[static_cast<std::size_t>(n)] - lf_[static_cast<std::size_t>(k)] -
               lf_[static_cast<std::size_t>(n - k)];
    }

private:
    std::vector<double> lf_;
};

/// J+|k> = sqrt((N-k)(k+1)) |k+1>
inline double dicke_raise(int n, int k) { return std::sqrt(double(n - k) * double(k + 1)); }

}  // namespace detail

/// (n . J)|psi> in the Dicke basis, n in the laboratory frame.
inline std::vector<cplx> dicke_spin_apply(const DickeState& psi, const Vec3& n) {
    const int N = psi.n_atoms();
    constexpr cplx I{0.0, 1.0};
    std::vector<cplx> out(psi.amplitudes().size(), 0.0);
    // Jx = (J+ + J-)/2, Jy = (J+ - J-)/(2i)
    const cplx c_raise = 0.5 * n[0] - 0.5 * I * n[1];
    const cplx c_lower = 0.5 * n[0] + 0.5 * I * n[1];
    for (int k = 0; k <= N; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        out[ku] += n[2] * (k - 0.5 * N) * psi[ku];
        if (k < N) out[ku + 1] += c_raise * detail::dicke_raise(N, k) * psi[ku];
        if (k > 0) out[ku - 1] += c_lower * detail::dicke_raise(N, k - 1) * psi[ku];
    }
    return out;
}

/// 4 Var(n . J) for a symmetric state.
inline double qfi_pure(const DickeState& psi, const Vec3& direction = {0, 0, 1}) {
    const std::vector<cplx> h = dicke_spin_apply(psi, direction);
    cplx mean = 0.0;
    double sq = 0.0;
    for (std::size_t k = 0; k < h.size(); ++k) {
        mean += std::conj(psi[k]) * h[k];
        sq += std::norm(h[k]);
    }
    return 4.0 * (sq - mean.real() * mean.real());
}

/// Pure symmetric state: 2 sum_{k,l} (k - l)^2 |a_k|^2 |a_l|^2.
inline double bound_coherence(const DickeState& psi) {
    const auto& a = psi.amplitudes();
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k)
        for (std::size_t l = 0; l < a.size(); ++l) {
            const double d = double(k) - double(l);
            s += d * d * std::norm(a[k]) * std::norm(a[l]);
        }
    return 2.0 * s;
}

inline constexpr int kMaxDickeToFullQubits = 12;

/// Amplitude of basis index b is a[popcount b] / sqrt(C(N, popcount b)).
inline PureState dicke_to_full(const DickeState& psi) {
    const int n = psi.n_atoms();
    if (n > kMaxDickeToFullQubits)
        throw std::invalid_argument("dicke_to_full: N above " +
                                    std::to_string(kMaxDickeToFullQubits));
    const detail::LogBinomial lc(n);
    std::vector<cplx> out(hilbert_dim(n));
    for (Mask b = 0; b < out.size(); ++b) {
        const int k = n_up(b);
        out[b] = psi[static_cast<std::size_t>(k)] * std::exp(-0.5 * lc(n, k));
    }
    return PureState::unchecked(n, std::move(out));
}

namespace detail {

/// Tr[rho R L] for a symmetric state with |S+| = n_plus, |S-| = n_minus:
///   sum_k a_k conj(a_{k + n+ - n-}) C(N-q, k-n-) / sqrt(C(N,k) C(N,k'))
/// where k runs over up-counts with every S- spin up and every S+ spin down.
inline cplx symmetric_ladder_trace(const DickeState& psi, int n_plus, int n_minus,
                                   const LogBinomial& lc) {
    const int N = psi.n_atoms();
    const int q = n_plus + n_minus;
    const int free = N - q;
    cplx acc = 0.0;
    for (int j = 0; j <= free; ++j) {
        const int k = j + n_minus;
        const int k2 = k + n_plus - n_minus;
        const cplx a = psi[static_cast<std::size_t>(k)];
        const cplx b = psi[static_cast<std::size_t>(k2)];
        if (a == 0.0 || b == 0.0) continue;
        const double coef = std::exp(lc(free, j) - 0.5 * (lc(N, k) + lc(N, k2)));
        acc += coef * a * std::conj(b);
    }
    return acc;
}

}  // namespace detail

/// E for any disjoint site-set pair of sizes (n_plus, n_minus).
inline CorrelatorResult symmetric_correlator(const DickeState& psi, int n_plus, int n_minus) {
    const int N = psi.n_atoms();
    if (n_plus < 0 || n_minus < 0 || n_plus + n_minus > N)
        throw std::invalid_argument("symmetric_correlator: need n+, n- >= 0 and n+ + n- <= N");
    if (n_plus + n_minus == N) {
        // only k = n- contributes and both binomials in the denominator are 1
        const cplx a = psi[static_cast<std::size_t>(n_minus)];
        const cplx b = psi[static_cast<std::size_t>(n_plus)];
        const double lc = std::lgamma(N + 1.0) - std::lgamma(n_plus + 1.0) - std::lgamma(n_minus + 1.0);
        if (n_plus == 0 || n_minus == 0) return detail::make_result(std::norm(a) * std::norm(b), N);
        return detail::make_result(std::norm(a) * std::norm(b) * std::exp(-2.0 * lc), N);
    }
    const detail::LogBinomial lc(N);
    return detail::make_result(std::norm(detail::symmetric_ladder_trace(psi, n_plus, n_minus, lc)),
                               n_plus + n_minus);
}

inline CorrelatorResult bell_correlator(const DickeState& psi, const CorrelatorSpec& spec) {
    spec.check(psi.n_atoms());
    return symmetric_correlator(psi, spec.n_plus(), spec.n_minus());
}

struct SymmetricSumOptions {
    std::optional<int> max_order;
    int threads = 1;
};

/// Correlator-sum bound with the inner set sum replaced by the multiplicity
/// C(N, n+) C(N - n+, n-) times E(n+, n-); multiplicities are combined with
/// the 2^-(N-q) weight in log space.
inline double symmetric_bound_correlator_sum(const DickeState& psi,
                                             const SymmetricSumOptions& opt = {}) {
    const int N = psi.n_atoms();
    const detail::LogBinomial lc(N);
    const double ln2 = std::log(2.0);
    std::vector<double> partial(static_cast<std::size_t>(N) + 1, 0.0);
    parallel_for(partial.size(), opt.threads, [&](std::size_t ip) {
        const int np = static_cast<int>(ip);
        double acc = 0.0;
        for (int nm = 0; nm <= N - np; ++nm) {
            const int q = np + nm;
            if (np == nm) continue;
            if (opt.max_order && q > *opt.max_order) break;
            const double e = std::norm(detail::symmetric_ladder_trace(psi, np, nm, lc));
            if (e == 0.0) continue;
            const double lw = lc(N, np) + lc(N - np, nm) - (N - q) * ln2 + std::log(e);
            const double d = np - nm;
            acc += d * d * std::exp(lw);
        }
        partial[ip] = acc;
    });
    double total = 0.0;
    for (double p : partial) total += p;
    if (!std::isfinite(total)) throw std::overflow_error("symmetric_bound_correlator_sum: overflow");
    return 2.0 * total;
}

// ============================================================================
// Two-mode model:  H = -Jx + c Jz^2
// ============================================================================

/// scaled: c = u / N, transition near u = -1 for every N.  raw: c = u.
enum class UConvention { scaled, raw };

struct TwoModeParams {
    int n_atoms = 2;
    double u = 0.0;
    UConvention convention = UConvention::scaled;

    double coupling() const noexcept {
        return convention == UConvention::scaled ? u / n_atoms : u;
    }
    void check() const {
        if (n_atoms < 1 || n_atoms > 2000)
            throw std::invalid_argument("TwoModeParams: N outside [1, 2000]");
        if (!std::isfinite(u)) throw std::invalid_argument("TwoModeParams: coupling is not finite");
    }
};

/// Dense (N+1)x(N+1) matrix in the Dicke basis, index k = number of up spins.
inline Eigen::MatrixXd two_mode_hamiltonian(const TwoModeParams& p) {
    p.check();
    const int N = p.n_atoms;
    const double c = p.coupling();
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(N + 1, N + 1);
    for (int k = 0; k <= N; ++k) {
        const double m = k - 0.5 * N;
        h(k, k) = c * m * m;
        if (k < N) h(k + 1, k) = h(k, k + 1) = -0.5 * detail::dicke_raise(N, k);
    }
    return h;
}

struct TwoModeGroundState {
    double energy = 0.0;
    DickeState state;
};

/// Lowest eigenpair from the tridiagonal even sector a_k = a_{N-k}.
inline TwoModeGroundState two_mode_ground_state(const TwoModeParams& p) {
    p.check();
    const int N = p.n_atoms;
    const double c = p.coupling();
    const int last = N / 2;  // representatives k = 0..last
    const double r2 = std::sqrt(2.0);
    auto diag_full = [&](int k) { const double m = k - 0.5 * N; return c * m * m; };
    auto off_full = [&](int k) { return -0.5 * detail::dicke_raise(N, k); };  // <k+1|H|k>

    Eigen::VectorXd d(last + 1);
    Eigen::VectorXd e(last);
    for (int k = 0; k <= last; ++k) d(k) = diag_full(k);
    for (int k = 0; k < last; ++k) e(k) = off_full(k);
    if (N % 2 == 0) {
        if (last > 0) e(last - 1) = r2 * off_full(last - 1);
    } else {
        // |last>_+ = (|last> + |last+1>)/sqrt(2) couples to itself
        d(last) += off_full(last);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(d, e, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success)
        throw ConvergenceError("two_mode_ground_state: tridiagonal eigensolver failed");
    std::vector<double> v(es.eigenvectors().col(0).data(),
                          es.eigenvectors().col(0).data() + last + 1);
    detail::fix_sign(v);

    std::vector<cplx> a(static_cast<std::size_t>(N) + 1);
    for (int k = 0; k <= last; ++k) {
        const bool self_paired = (N % 2 == 0) && k == last;
        const double amp = self_paired ? v[static_cast<std::size_t>(k)]
                                       : v[static_cast<std::size_t>(k)] / r2;
        a[static_cast<std::size_t>(k)] = amp;
        a[static_cast<std::size_t>(N - k)] = amp;
    }
    double s = 0.0;
    for (const cplx& x : a) s += std::norm(x);
    for (cplx& x : a) x /= std::sqrt(s);
    detail::fix_global_phase(a);
    return {es.eigenvalues()(0), DickeState(N, std::move(a))};
}

}  // namespace bellqfi
