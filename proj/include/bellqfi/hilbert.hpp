// Copyright 2026 The bellqfi Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file hilbert.hpp
 * @brief Bit-indexed N-qubit Hilbert space: basis conventions, Pauli and
 *        ladder operators, the collective generator and reference states.
 *
 * Basis convention: bit k of a basis index set means qubit k is |up> along
 * the generator axis. Qubits are indexed little-endian. In the frame of a
 * SpinTriad (xi1, xi2, xi) the local Pauli matrices are
 *
 *   sigma_xi1 |up> = |dn>,  sigma_xi2 |up> = i|dn>,  sigma_xi |up> = |up>,
 *
 * so that sigma_+ = (sigma_xi1 + i sigma_xi2)/2 maps |dn> to |up> with
 * coefficient exactly 1.
 */
#pragma once

#include <Eigen/Dense>

#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bellqfi {

using cplx = std::complex<double>;
using Vec3 = std::array<double, 3>;
using Mask = std::uint64_t;

/// Largest qubit count for dense pure-state vectors.
inline constexpr int kMaxPureQubits = 24;
/// Largest qubit count for dense density matrices.
inline constexpr int kMaxMixedQubits = 12;

inline constexpr double kNormTol = 1e-12;

// ============================================================================
// Basis helpers
// ============================================================================

inline constexpr Mask full_mask(int n_qubits) noexcept {
    return n_qubits >= 64 ? ~Mask{0} : (Mask{1} << n_qubits) - 1;
}

inline constexpr std::size_t hilbert_dim(int n_qubits) noexcept {
    return std::size_t{1} << n_qubits;
}

/// Number of up spins in a basis index.
inline constexpr int n_up(Mask bits) noexcept { return std::popcount(bits); }

/// Eigenvalue of the collective generator on basis state |bits>: n_up - N/2.
inline constexpr double generator_eigenvalue(Mask bits, int n_qubits) noexcept {
    return n_up(bits) - 0.5 * n_qubits;
}

// ============================================================================
// Spin triad
// ============================================================================

namespace detail {

inline double dot(const Vec3& a, const Vec3& b) noexcept {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Vec3 cross(const Vec3& a, const Vec3& b) noexcept {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

inline double norm(const Vec3& a) noexcept { return std::sqrt(dot(a, a)); }

}  // namespace detail

/// Right-handed orthonormal frame (xi1, xi2, xi); xi is the generator axis.
class SpinTriad {
public:
    /// Validating constructor. Requires unit vectors, mutual orthogonality
    /// and xi1 x xi2 = xi, all within 1e-12.
    SpinTriad(const Vec3& xi, const Vec3& xi1, const Vec3& xi2)
        : xi_(xi), xi1_(xi1), xi2_(xi2) {
        constexpr double tol = 1e-12;
        for (const Vec3* v : {&xi_, &xi1_, &xi2_}) {
            if (std::abs(detail::norm(*v) - 1.0) > tol)
                throw std::invalid_argument("SpinTriad: axis is not unit-norm");
        }
        if (std::abs(detail::dot(xi_, xi1_)) > tol ||
            std::abs(detail::dot(xi_, xi2_)) > tol ||
            std::abs(detail::dot(xi1_, xi2_)) > tol)
            throw std::invalid_argument("SpinTriad: axes are not orthogonal");
        const Vec3 c = detail::cross(xi1_, xi2_);
        for (int i = 0; i < 3; ++i) {
            if (std::abs(c[i] - xi_[i]) > tol)
                throw std::invalid_argument("SpinTriad: frame is not right-handed");
        }
    }

    /// Generator along z with the laboratory x, y as transverse axes.
    static SpinTriad z() { return {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}; }
    static SpinTriad x() { return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}; }
    static SpinTriad y() { return {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}; }

    /// Completes an arbitrary direction to a right-handed triad.
    static SpinTriad along(Vec3 dir) {
        const double n = detail::norm(dir);
        if (n == 0.0) throw std::invalid_argument("SpinTriad: zero direction");
        for (double& c : dir) c /= n;
        // pick the lab axis least aligned with dir as seed for xi1
        Vec3 seed{0, 0, 0};
        int k = 0;
        for (int i = 1; i < 3; ++i)
            if (std::abs(dir[i]) < std::abs(dir[k])) k = i;
        seed[k] = 1.0;
        Vec3 a = detail::cross(seed, dir);
        const double an = detail::norm(a);
        for (double& c : a) c /= an;
        Vec3 b = detail::cross(dir, a);
        return {dir, a, b};
    }

    const Vec3& xi() const noexcept { return xi_; }
    const Vec3& xi1() const noexcept { return xi1_; }
    const Vec3& xi2() const noexcept { return xi2_; }

    /// Components of a lab-frame vector in the (xi1, xi2, xi) frame.
    Vec3 local(const Vec3& v) const noexcept {
        return {detail::dot(v, xi1_), detail::dot(v, xi2_), detail::dot(v, xi_)};
    }

private:
    Vec3 xi_, xi1_, xi2_;
};

// ============================================================================
// Site sets
// ============================================================================

/// Strictly increasing list of qubit indices.
class SiteSet {
public:
    SiteSet() = default;
    SiteSet(std::initializer_list<int> sites) : SiteSet(std::vector<int>(sites)) {}
    explicit SiteSet(std::vector<int> sites) : sites_(std::move(sites)) {
        for (std::size_t i = 0; i < sites_.size(); ++i) {
            if (sites_[i] < 0 || sites_[i] >= 64)
                throw std::invalid_argument("SiteSet: site index out of range");
            if (i > 0 && sites_[i] <= sites_[i - 1])
                throw std::invalid_argument("SiteSet: sites must be strictly increasing");
        }
    }

    static SiteSet from_mask(Mask m) {
        std::vector<int> s;
        for (int k = 0; m != 0; ++k, m >>= 1)
            if (m & 1U) s.push_back(k);
        return SiteSet(std::move(s));
    }

    static SiteSet range(int begin, int end) {
        std::vector<int> s;
        for (int k = begin; k < end; ++k) s.push_back(k);
        return SiteSet(std::move(s));
    }

    const std::vector<int>& sites() const noexcept { return sites_; }
    int size() const noexcept { return static_cast<int>(sites_.size()); }
    bool empty() const noexcept { return sites_.empty(); }

    Mask mask() const noexcept {
        Mask m = 0;
        for (int s : sites_) m |= Mask{1} << s;
        return m;
    }

    /// True when every site is a valid index for n_qubits.
    bool fits(int n_qubits) const noexcept {
        return sites_.empty() || sites_.back() < n_qubits;
    }

    friend bool operator==(const SiteSet&, const SiteSet&) = default;

private:
    std::vector<int> sites_;
};

/// Pair of disjoint site sets: S+ is raised, S- is lowered.
class CorrelatorSpec {
public:
    CorrelatorSpec(SiteSet s_plus, SiteSet s_minus)
        : plus_(std::move(s_plus)), minus_(std::move(s_minus)) {
        if ((plus_.mask() & minus_.mask()) != 0)
            throw std::invalid_argument("CorrelatorSpec: S+ and S- overlap");
    }

    static CorrelatorSpec from_masks(Mask plus, Mask minus) {
        return {SiteSet::from_mask(plus), SiteSet::from_mask(minus)};
    }

    /// The full N-party correlator with every qubit raised.
    static CorrelatorSpec full(int n_qubits) {
        return {SiteSet::range(0, n_qubits), SiteSet{}};
    }

    const SiteSet& s_plus() const noexcept { return plus_; }
    const SiteSet& s_minus() const noexcept { return minus_; }
    int n_plus() const noexcept { return plus_.size(); }
    int n_minus() const noexcept { return minus_.size(); }
    int order() const noexcept { return plus_.size() + minus_.size(); }
    Mask plus_mask() const noexcept { return plus_.mask(); }
    Mask minus_mask() const noexcept { return minus_.mask(); }

    void check(int n_qubits) const {
        if (!plus_.fits(n_qubits) || !minus_.fits(n_qubits))
            throw std::invalid_argument("CorrelatorSpec: site outside the register");
    }

private:
    SiteSet plus_, minus_;
};

// ============================================================================
// States
// ============================================================================

/// Dense amplitude vector over the 2^N basis.
class PureState {
public:
    PureState() = default;

    /// Wraps amplitudes without normalization checks (operator outputs).
    static PureState unchecked(int n_qubits, std::vector<cplx> amps) {
        check_size(n_qubits);
        if (amps.size() != hilbert_dim(n_qubits))
            throw std::invalid_argument("PureState: amplitude count is not 2^N");
        PureState s;
        s.n_ = n_qubits;
        s.amps_ = std::move(amps);
        return s;
    }

    /// Wraps amplitudes and enforces unit norm within 1e-12.
    PureState(int n_qubits, std::vector<cplx> amps)
        : PureState(unchecked(n_qubits, std::move(amps))) {
        if (std::abs(norm_squared() - 1.0) > kNormTol)
            throw std::invalid_argument("PureState: state is not normalized");
    }

    static PureState basis(int n_qubits, Mask bits) {
        check_size(n_qubits);
        if (bits > full_mask(n_qubits))
            throw std::invalid_argument("PureState: basis index out of range");
        std::vector<cplx> a(hilbert_dim(n_qubits));
        a[bits] = 1.0;
        return unchecked(n_qubits, std::move(a));
    }

    int n_qubits() const noexcept { return n_; }
    std::size_t dim() const noexcept { return amps_.size(); }
    const std::vector<cplx>& amplitudes() const noexcept { return amps_; }
    std::vector<cplx>& amplitudes() noexcept { return amps_; }
    cplx operator[](std::size_t i) const noexcept { return amps_[i]; }
    cplx& operator[](std::size_t i) noexcept { return amps_[i]; }

    double norm_squared() const noexcept {
        double s = 0.0;
        for (const cplx& a : amps_) s += std::norm(a);
        return s;
    }

    void normalize() {
        const double n = std::sqrt(norm_squared());
        if (n == 0.0) throw std::domain_error("PureState: cannot normalize zero vector");
        for (cplx& a : amps_) a /= n;
    }

    static void check_size(int n_qubits) {
        if (n_qubits < 1 || n_qubits > kMaxPureQubits)
            throw std::invalid_argument("PureState: qubit count outside [1, " +
                                        std::to_string(kMaxPureQubits) + "]");
    }

private:
    int n_ = 0;
    std::vector<cplx> amps_;
};

/// <a|b>
inline cplx inner(const PureState& a, const PureState& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("inner: size mismatch");
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

using ComplexMatrix = Eigen::MatrixXcd;

/// Hermitian, unit-trace, positive semidefinite matrix over the 2^N basis.
class DensityMatrix {
public:
    DensityMatrix(int n_qubits, ComplexMatrix elements)
        : n_(n_qubits), rho_(std::move(elements)) {
        if (n_qubits < 1 || n_qubits > kMaxMixedQubits)
            throw std::invalid_argument("DensityMatrix: qubit count outside [1, 12]");
        const auto d = static_cast<Eigen::Index>(hilbert_dim(n_qubits));
        if (rho_.rows() != d || rho_.cols() != d)
            throw std::invalid_argument("DensityMatrix: shape is not 2^N x 2^N");
        if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
            throw std::invalid_argument("DensityMatrix: not Hermitian");
        if (std::abs(rho_.trace() - cplx{1.0}) > 1e-12)
            throw std::invalid_argument("DensityMatrix: trace is not 1");
        const Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho_, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -1e-10)
            throw std::invalid_argument("DensityMatrix: not positive semidefinite");
    }

    static DensityMatrix from_pure(const PureState& psi) {
        Eigen::Map<const Eigen::VectorXcd> v(psi.amplitudes().data(),
                                             static_cast<Eigen::Index>(psi.dim()));
        ComplexMatrix rho = v * v.adjoint();
        return {psi.n_qubits(), std::move(rho)};
    }

    static DensityMatrix maximally_mixed(int n_qubits) {
        const auto d = static_cast<Eigen::Index>(hilbert_dim(n_qubits));
        return {n_qubits, ComplexMatrix::Identity(d, d) / static_cast<double>(d)};
    }

    int n_qubits() const noexcept { return n_; }
    Eigen::Index dim() const noexcept { return rho_.rows(); }
    const ComplexMatrix& matrix() const noexcept { return rho_; }
    cplx operator()(std::size_t n, std::size_t m) const {
        return rho_(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
    }

private:
    int n_;
    ComplexMatrix rho_;
};

// ============================================================================
// Operators
// ============================================================================

/// Pauli axis in the state's own frame: x ~ xi1, y ~ xi2, z ~ xi.
enum class Axis { x, y, z };

inline void check_site(int site, int n_qubits) {
    if (site < 0 || site >= n_qubits)
        throw std::out_of_range("qubit index " + std::to_string(site) +
                                " outside register of " + std::to_string(n_qubits));
}

/// sigma_axis on one qubit.
inline PureState pauli_apply(Axis axis, int site, const PureState& state) {
    check_site(site, state.n_qubits());
    const Mask bit = Mask{1} << site;
    std::vector<cplx> out(state.dim());
    const auto& in = state.amplitudes();
    constexpr cplx I{0.0, 1.0};
    for (Mask b = 0; b < state.dim(); ++b) {
        const bool up = (b & bit) != 0;
        switch (axis) {
            case Axis::x: out[b ^ bit] = in[b]; break;
            // sigma_y|up> = i|dn>, sigma_y|dn> = -i|up>
            case Axis::y: out[b ^ bit] = (up ? I : -I) * in[b]; break;
            case Axis::z: out[b] = up ? in[b] : -in[b]; break;
        }
    }
    return PureState::unchecked(state.n_qubits(), std::move(out));
}

/// n . sigma on one qubit, with the state expressed in the eigenbasis of
/// triad.xi() and `direction` given in the laboratory frame.
inline PureState pauli_apply(const Vec3& direction, int site, const PureState& state,
                             const SpinTriad& triad = SpinTriad::z()) {
    const Vec3 c = triad.local(direction);
    const PureState sx = pauli_apply(Axis::x, site, state);
    const PureState sy = pauli_apply(Axis::y, site, state);
    const PureState sz = pauli_apply(Axis::z, site, state);
    std::vector<cplx> out(state.dim());
    for (std::size_t b = 0; b < out.size(); ++b)
        out[b] = c[0] * sx[b] + c[1] * sy[b] + c[2] * sz[b];
    return PureState::unchecked(state.n_qubits(), std::move(out));
}

/// h|psi> with h = 1/2 sum_k sigma_xi^(k), state in the xi eigenbasis.
inline PureState collective_generator_apply(const PureState& state) {
    std::vector<cplx> out(state.dim());
    for (Mask b = 0; b < state.dim(); ++b)
        out[b] = generator_eigenvalue(b, state.n_qubits()) * state[b];
    return PureState::unchecked(state.n_qubits(), std::move(out));
}

/// R_{S+} L_{S-}|psi>. Basis state b survives iff every S+ bit is clear and
/// every S- bit is set; it maps to b with those bits flipped.
inline PureState ladder_apply(const CorrelatorSpec& spec, const PureState& state) {
    spec.check(state.n_qubits());
    const Mask plus = spec.plus_mask();
    const Mask minus = spec.minus_mask();
    const Mask flip = plus | minus;
    std::vector<cplx> out(state.dim());
    for (Mask b = 0; b < state.dim(); ++b)
        if ((b & flip) == minus) out[b ^ flip] += state[b];
    return PureState::unchecked(state.n_qubits(), std::move(out));
}

// ============================================================================
// Frame rotation
// ============================================================================

/// Single-qubit unitary whose columns are |up_xi>, |dn_xi> written in the
/// laboratory z basis, ordered (up, dn). |dn_xi> = sigma_xi1 |up_xi>.
inline Eigen::Matrix2cd frame_unitary(const SpinTriad& triad) {
    constexpr cplx I{0.0, 1.0};
    auto pauli = [&](const Vec3& n) {
        Eigen::Matrix2cd m;
        // (up, dn) ordering: sigma_z = diag(1, -1)
        m << n[2], n[0] - I * n[1], n[0] + I * n[1], -n[2];
        return m;
    };
    const Eigen::Matrix2cd s_xi = pauli(triad.xi());
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(s_xi);
    Eigen::Vector2cd up = es.eigenvectors().col(1);  // eigenvalue +1
    Eigen::Vector2cd dn = pauli(triad.xi1()) * up;
    Eigen::Matrix2cd u;
    u.col(0) = up;
    u.col(1) = dn;
    return u;
}

namespace detail {

/// Applies the same 2x2 matrix (up, dn ordering) to every qubit of a vector.
inline void apply_each_qubit(std::vector<cplx>& v, int n_qubits, const Eigen::Matrix2cd& m) {
    for (int k = 0; k < n_qubits; ++k) {
        const Mask bit = Mask{1} << k;
        for (Mask b = 0; b < v.size(); ++b) {
            if (b & bit) continue;
            const cplx dn = v[b];
            const cplx up = v[b | bit];
            v[b | bit] = m(0, 0) * up + m(0, 1) * dn;
            v[b] = m(1, 0) * up + m(1, 1) * dn;
        }
    }
}

}  // namespace detail

/// Re-expresses a laboratory z-basis state in the eigenbasis of triad.xi().
inline PureState to_frame(const PureState& lab, const SpinTriad& triad) {
    std::vector<cplx> v = lab.amplitudes();
    detail::apply_each_qubit(v, lab.n_qubits(), frame_unitary(triad).adjoint());
    return PureState::unchecked(lab.n_qubits(), std::move(v));
}

inline DensityMatrix to_frame(const DensityMatrix& lab, const SpinTriad& triad) {
    const Eigen::Matrix2cd ud = frame_unitary(triad).adjoint();
    const int n = lab.n_qubits();
    ComplexMatrix rho = lab.matrix();
    std::vector<cplx> col(static_cast<std::size_t>(rho.rows()));
    // U^dag rho U: rotate columns, then rows via the adjoint.
    for (int pass = 0; pass < 2; ++pass) {
        for (Eigen::Index j = 0; j < rho.cols(); ++j) {
            for (Eigen::Index i = 0; i < rho.rows(); ++i) col[i] = rho(i, j);
            detail::apply_each_qubit(col, n, ud);
            for (Eigen::Index i = 0; i < rho.rows(); ++i) rho(i, j) = col[i];
        }
        rho = rho.adjoint().eval();
    }
    // symmetrize away rounding so the Hermiticity check holds
    ComplexMatrix herm = 0.5 * (rho + rho.adjoint());
    return {n, std::move(herm)};
}

// ============================================================================
// Reference states
// ============================================================================

/// (|up...up> + |dn...dn>)/sqrt(2)
inline PureState ghz_state(int n_qubits) {
    PureState::check_size(n_qubits);
    std::vector<cplx> a(hilbert_dim(n_qubits));
    a.front() = a.back() = 1.0 / std::sqrt(2.0);
    return {n_qubits, std::move(a)};
}

/// Product of (|up> + |dn>)/sqrt(2) on every qubit.
inline PureState product_plus_state(int n_qubits) {
    PureState::check_size(n_qubits);
    const double amp = std::pow(2.0, -0.5 * n_qubits);
    return {n_qubits, std::vector<cplx>(hilbert_dim(n_qubits), amp)};
}

}  // namespace bellqfi
