// Copyright 2026 The bellqfi Authors
// SPDX-License-Identifier: Apache-2.0

#include "bellqfi/hilbert.hpp"
#include "bellqfi/random.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace bellqfi;

namespace {

constexpr cplx I{0.0, 1.0};

void expect_state_eq(const PureState& psi, const std::vector<cplx>& ref, double tol = 1e-12) {
    ASSERT_EQ(psi.dim(), ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
        EXPECT_NEAR(psi[i].real(), ref[i].real(), tol) << "i=" << i << " (real)";
        EXPECT_NEAR(psi[i].imag(), ref[i].imag(), tol) << "i=" << i << " (imag)";
    }
}

const Mask kUp = 1, kDn = 0;

}  // namespace

// ---------- pauli_apply ----------

TEST(Pauli, ZOnUpIsEigenstate) {
    expect_state_eq(pauli_apply(Axis::z, 0, PureState::basis(1, kUp)), {0, 1});
}

TEST(Pauli, XFlipsUp) {
    expect_state_eq(pauli_apply(Axis::x, 0, PureState::basis(1, kUp)), {1, 0});
}

TEST(Pauli, YOnUpGivesIDown) {
    expect_state_eq(pauli_apply(Axis::y, 0, PureState::basis(1, kUp)), {I, 0});
}

TEST(Pauli, XYEqualsIZOnBasisStates) {
    for (Mask b : {kDn, kUp}) {
        const PureState e = PureState::basis(1, b);
        const PureState xy = pauli_apply(Axis::x, 0, pauli_apply(Axis::y, 0, e));
        const PureState z = pauli_apply(Axis::z, 0, e);
        for (std::size_t i = 0; i < 2; ++i) EXPECT_NEAR(std::abs(xy[i] - I * z[i]), 0.0, 1e-15);
    }
}

TEST(Pauli, MatchesKroneckerOracle) {
    Rng rng(11);
    for (int n = 1; n <= 4; ++n) {
        const PureState psi = random_pure_state(n, rng);
        for (int k = 0; k < n; ++k) {
            const std::pair<Axis, oracle::Mat> ops[] = {
                {Axis::x, oracle::sx()}, {Axis::y, oracle::sy()}, {Axis::z, oracle::sz()}};
            for (const auto& [axis, m] : ops) {
                const Eigen::VectorXcd ref = oracle::on_site(m, k, n) * oracle::vec(psi);
                const PureState got = pauli_apply(axis, k, psi);
                EXPECT_LT((oracle::vec(got) - ref).norm(), 1e-13);
            }
        }
    }
}

TEST(Pauli, SiteOutOfRangeThrows) {
    EXPECT_THROW(pauli_apply(Axis::x, 2, product_plus_state(2)), std::out_of_range);
    EXPECT_THROW(pauli_apply(Axis::x, -1, product_plus_state(2)), std::out_of_range);
}

TEST(Pauli, GeneralDirectionInRotatedFrame) {
    // n.sigma in lab frame equals the same operator after rotating into xi's frame
    Rng rng(5);
    const SpinTriad t = SpinTriad::along({0.3, -0.5, 0.8});
    const Vec3 dir{0.6, 0.0, -0.8};
    const PureState lab = random_pure_state(3, rng);
    const PureState lhs = to_frame(pauli_apply(dir, 1, lab), t);
    const PureState rhs = pauli_apply(dir, 1, to_frame(lab, t), t);
    for (std::size_t b = 0; b < lab.dim(); ++b) EXPECT_NEAR(std::abs(lhs[b] - rhs[b]), 0.0, 1e-12);
}

// ---------- generator ----------

TEST(Generator, EigenvalueIsUpCountMinusHalfN) {
    EXPECT_DOUBLE_EQ(generator_eigenvalue(0b11, 2), 1.0);
    EXPECT_DOUBLE_EQ(generator_eigenvalue(0b00, 2), -1.0);
    EXPECT_DOUBLE_EQ(generator_eigenvalue(0b101, 3), 0.5);
}

TEST(Generator, TraceFree) {
    for (int n = 1; n <= 14; ++n) {
        double s = 0.0;
        for (Mask b = 0; b < hilbert_dim(n); ++b) s += generator_eigenvalue(b, n);
        EXPECT_EQ(s, 0.0) << "N=" << n;
    }
}

TEST(Generator, ApplyMatchesOracle) {
    Rng rng(3);
    const PureState psi = random_pure_state(4, rng);
    const Eigen::VectorXcd ref = oracle::collective({0, 0, 1}, 4) * oracle::vec(psi);
    EXPECT_LT((oracle::vec(collective_generator_apply(psi)) - ref).norm(), 1e-13);
}

// ---------- ladder ----------

TEST(Ladder, RaiseDown) {
    const auto spec = CorrelatorSpec({0}, {});
    expect_state_eq(ladder_apply(spec, PureState::basis(1, kDn)), {0, 1});
}

TEST(Ladder, RaiseUpVanishes) {
    const auto spec = CorrelatorSpec({0}, {});
    expect_state_eq(ladder_apply(spec, PureState::basis(1, kUp)), {0, 0});
}

TEST(Ladder, TwoQubitRaiseLower) {
    // (|dn up> + |up dn>)/sqrt2 with qubit 0 the first label; index = bit pattern
    const double s = 1.0 / std::sqrt(2.0);
    const PureState psi(2, {0, s, s, 0});
    // S+ = {0} needs bit0 clear, S- = {1} needs bit1 set: only b = 0b10 survives -> 0b01
    expect_state_eq(ladder_apply(CorrelatorSpec({0}, {1}), psi), {0, s, 0, 0});
}

TEST(Ladder, OverlappingSetsRejected) {
    EXPECT_THROW(CorrelatorSpec({0, 1}, {1}), std::invalid_argument);
}

TEST(Ladder, SiteSetMustIncrease) {
    EXPECT_THROW(SiteSet({2, 1}), std::invalid_argument);
    EXPECT_THROW(SiteSet({1, 1}), std::invalid_argument);
}

TEST(Ladder, MatchesOracleOnAllTwoQubitSpecs) {
    Rng rng(17);
    const PureState psi = random_pure_state(3, rng);
    for (Mask plus = 0; plus < 8; ++plus)
        for (Mask minus = 0; minus < 8; ++minus) {
            if (plus & minus) continue;
            const Eigen::VectorXcd ref = oracle::ladder(plus, minus, 3) * oracle::vec(psi);
            const PureState got = ladder_apply(CorrelatorSpec::from_masks(plus, minus), psi);
            EXPECT_LT((oracle::vec(got) - ref).norm(), 1e-14);
        }
}

TEST(Ladder, ForwardThenBackwardIsIdempotent) {
    for (int n = 1; n <= 2; ++n) {
        const Mask full = full_mask(n);
        for (Mask plus = 0; plus <= full; ++plus)
            for (Mask minus = 0; minus <= full; ++minus) {
                if (plus & minus) continue;
                const auto f = CorrelatorSpec::from_masks(plus, minus);
                const auto b = CorrelatorSpec::from_masks(minus, plus);
                for (Mask idx = 0; idx <= full; ++idx) {
                    const PureState once = ladder_apply(b, ladder_apply(f, PureState::basis(n, idx)));
                    const PureState twice = ladder_apply(b, ladder_apply(f, once));
                    for (std::size_t i = 0; i < once.dim(); ++i) EXPECT_EQ(once[i], twice[i]);
                }
            }
    }
}

// ---------- reference states ----------

TEST(ReferenceStates, GhzTwo) {
    const double s = 1.0 / std::sqrt(2.0);
    expect_state_eq(ghz_state(2), {s, 0, 0, s});
}

TEST(ReferenceStates, ProductOne) {
    const double s = 1.0 / std::sqrt(2.0);
    expect_state_eq(product_plus_state(1), {s, s});
}

TEST(ReferenceStates, Normalized) {
    for (int n = 1; n <= 16; ++n) {
        EXPECT_NEAR(ghz_state(n).norm_squared(), 1.0, 1e-12);
        EXPECT_NEAR(product_plus_state(n).norm_squared(), 1.0, 1e-12);
    }
}

TEST(ReferenceStates, MemoryCapEnforced) {
    EXPECT_THROW(ghz_state(kMaxPureQubits + 1), std::invalid_argument);
    EXPECT_THROW(product_plus_state(0), std::invalid_argument);
}

// ---------- types ----------

TEST(Types, PureStateRejectsUnnormalized) {
    EXPECT_THROW(PureState(1, {1.0, 1.0}), std::invalid_argument);
    EXPECT_THROW(PureState(2, {1.0, 0.0}), std::invalid_argument);
}

TEST(Types, DensityMatrixValidation) {
    ComplexMatrix m = ComplexMatrix::Identity(2, 2);
    EXPECT_THROW(DensityMatrix(1, m), std::invalid_argument);  // trace 2
    m(0, 0) = 1.5;
    m(1, 1) = -0.5;
    EXPECT_THROW(DensityMatrix(1, m), std::invalid_argument);  // negative eigenvalue
    ComplexMatrix nh = ComplexMatrix::Identity(2, 2) * 0.5;
    nh(0, 1) = 0.1;
    EXPECT_THROW(DensityMatrix(1, nh), std::invalid_argument);  // not Hermitian
}

TEST(Types, TriadValidation) {
    EXPECT_NO_THROW(SpinTriad::z());
    EXPECT_NO_THROW(SpinTriad::x());
    EXPECT_NO_THROW(SpinTriad::y());
    EXPECT_THROW(SpinTriad({0, 0, 1}, {0, 1, 0}, {1, 0, 0}), std::invalid_argument);  // left-handed
    EXPECT_THROW(SpinTriad({0, 0, 2}, {1, 0, 0}, {0, 1, 0}), std::invalid_argument);
    const SpinTriad t = SpinTriad::along({1, 2, 3});
    EXPECT_NEAR(t.xi()[2] * std::sqrt(14.0), 3.0, 1e-12);
}

TEST(Frame, RotationMapsGeneratorToUpCount) {
    // after to_frame, the lab-frame n.J acts as the diagonal up-count operator
    Rng rng(8);
    const SpinTriad t = SpinTriad::along({-0.2, 0.7, 0.4});
    const PureState lab = random_pure_state(3, rng);
    const Eigen::VectorXcd h_lab = oracle::collective(t.xi(), 3) * oracle::vec(lab);
    const PureState h_lab_state = PureState::unchecked(
        3, std::vector<cplx>(h_lab.data(), h_lab.data() + h_lab.size()));
    const PureState lhs = to_frame(h_lab_state, t);
    const PureState rhs = collective_generator_apply(to_frame(lab, t));
    for (std::size_t b = 0; b < lab.dim(); ++b) EXPECT_NEAR(std::abs(lhs[b] - rhs[b]), 0.0, 1e-12);
}

TEST(Frame, LadderInRotatedFrameUsesTransverseAxes) {
    // sigma_+ = (sigma_xi1 + i sigma_xi2)/2 maps |dn_xi> to |up_xi> with coefficient 1
    const SpinTriad t = SpinTriad::along({1, 1, 0});
    const Eigen::Matrix2cd u = frame_unitary(t);
    Eigen::Matrix2cd s1, s2;
    auto pauli = [](const Vec3& n) {
        Eigen::Matrix2cd m;
        m << n[2], cplx(n[0], -n[1]), cplx(n[0], n[1]), -n[2];
        return m;
    };
    s1 = pauli(t.xi1());
    s2 = pauli(t.xi2());
    const Eigen::Matrix2cd sp = 0.5 * (s1 + I * s2);
    const Eigen::Vector2cd img = sp * u.col(1);
    EXPECT_NEAR(std::abs(img(0) - u(0, 0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(img(1) - u(1, 0)), 0.0, 1e-12);
}
