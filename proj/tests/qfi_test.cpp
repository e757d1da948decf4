// Copyright 2026 The bellqfi Authors
// SPDX-License-Identifier: Apache-2.0

#include "bellqfi/qfi.hpp"
#include "bellqfi/random.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace bellqfi;

namespace {

/// Independent QFI oracle: explicit h matrix and full eigen-decomposition.
double qfi_oracle(const oracle::Mat& rho, const Vec3& dir, int n) {
    const Eigen::SelfAdjointEigenSolver<oracle::Mat> es(rho);
    const oracle::Mat a = es.eigenvectors().adjoint() * oracle::collective(dir, n) * es.eigenvectors();
    double f = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            const double pi = es.eigenvalues()(i), pj = es.eigenvalues()(j);
            if (pi + pj < 1e-12) continue;
            f += (pi - pj) * (pi - pj) / (pi + pj) * std::norm(a(i, j));
        }
    return 2.0 * f;
}

}  // namespace

TEST(QfiSpectral, GhzIsHeisenberg) {
    for (int n = 1; n <= 6; ++n)
        EXPECT_NEAR(qfi_spectral(DensityMatrix::from_pure(ghz_state(n))), double(n) * n, 1e-9);
}

TEST(QfiSpectral, ProductIsShotNoise) {
    for (int n = 1; n <= 6; ++n)
        EXPECT_NEAR(qfi_spectral(DensityMatrix::from_pure(product_plus_state(n))), n, 1e-9);
}

TEST(QfiSpectral, MaximallyMixedIsZero) {
    EXPECT_NEAR(qfi_spectral(DensityMatrix::maximally_mixed(3)), 0.0, 1e-12);
    EXPECT_NEAR(qfi_spectral(DensityMatrix::maximally_mixed(3), SpinTriad::along({1, 1, 1})), 0.0, 1e-12);
}

TEST(QfiSpectral, MatchesOracleOnRandomAxes) {
    Rng rng(31);
    for (int rep = 0; rep < 10; ++rep) {
        const int n = 1 + rep % 4;
        const DensityMatrix rho = random_density_matrix(n, 2, rng);
        const SpinTriad t = SpinTriad::along({0.1 * rep - 0.3, 0.5, -0.2});
        EXPECT_NEAR(qfi_spectral(rho, t), qfi_oracle(rho.matrix(), t.xi(), n), 1e-9);
    }
}

TEST(QfiPure, ReferenceValues) {
    for (int n = 1; n <= 16; ++n) {
        EXPECT_NEAR(qfi_pure(ghz_state(n)), double(n) * n, 1e-9);
        EXPECT_NEAR(qfi_pure(product_plus_state(n)), n, 1e-9);
    }
    EXPECT_NEAR(qfi_pure(PureState::basis(5, 0b10110)), 0.0, 1e-15);
}

TEST(QfiPure, GeneralAxisMatchesSpectral) {
    Rng rng(2);
    for (int n = 1; n <= 5; ++n) {
        const PureState psi = random_pure_state(n, rng);
        const SpinTriad t = SpinTriad::along({0.4, -0.1, 0.9});
        EXPECT_NEAR(qfi_pure(psi, t), qfi_spectral(DensityMatrix::from_pure(psi), t), 1e-9);
    }
}

TEST(QfiPure, ProductAlongItsOwnAxisVanishes) {
    // |+>^N is an eigenstate of Jx
    EXPECT_NEAR(qfi_pure(product_plus_state(4), SpinTriad::x()), 0.0, 1e-12);
}

TEST(BoundTrace, PureEqualsQfiPure) {
    Rng rng(7);
    for (int n = 1; n <= 5; ++n) {
        const PureState psi = random_pure_state(n, rng);
        EXPECT_NEAR(bound_trace(DensityMatrix::from_pure(psi)), qfi_pure(psi), 1e-9);
    }
}

TEST(BoundTrace, MaximallyMixedIsZero) {
    EXPECT_NEAR(bound_trace(DensityMatrix::maximally_mixed(4)), 0.0, 1e-12);
}

TEST(BoundTrace, BelowSpectralForMixedStates) {
    Rng rng(13);
    for (int rep = 0; rep < 50; ++rep) {
        const DensityMatrix rho = random_density_matrix(2, 1 + rep % 4, rng);
        EXPECT_LE(bound_trace(rho), qfi_spectral(rho) + 1e-9);
    }
}

TEST(BoundCoherence, GhzAndBasisState) {
    for (int n = 1; n <= 8; ++n) EXPECT_NEAR(bound_coherence(ghz_state(n)), double(n) * n, 1e-12);
    EXPECT_NEAR(bound_coherence(PureState::basis(4, 0b0110)), 0.0, 1e-15);
    EXPECT_NEAR(bound_coherence(DensityMatrix::from_pure(PureState::basis(3, 0b001))), 0.0, 1e-15);
}

TEST(BoundCoherence, EqualsTraceFormOnRandomMixedStates) {
    Rng rng(19);
    for (int rep = 0; rep < 40; ++rep) {
        const int n = 1 + rep % 6;
        const DensityMatrix rho = random_density_matrix(n, 1 + rep % 5, rng);
        const SpinTriad t = rep % 2 ? SpinTriad::z() : SpinTriad::along({rep * 0.1, 1.0, -0.5});
        EXPECT_NEAR(bound_coherence(rho, t), bound_trace(rho, t), 1e-10);
    }
}

// ---------- correlator-sum bound ----------

TEST(BoundCorrelatorSum, ProductSaturatesShotNoise) {
    for (int n = 1; n <= 10; ++n) EXPECT_NEAR(bound_correlator_sum(product_plus_state(n)), n, 1e-9);
}

TEST(BoundCorrelatorSum, GhzReachesHalfHeisenberg) {
    for (int n = 2; n <= 8; ++n) {
        const double b = bound_correlator_sum(ghz_state(n));
        EXPECT_GE(b, double(n) * n / 2.0);
        // only (S+, S-) = (all, none) and (none, all) contribute: 2 * 2 * N^2 / 4
        EXPECT_NEAR(b, double(n) * n, 1e-12);
    }
}

TEST(BoundCorrelatorSum, AllUpVanishes) {
    EXPECT_EQ(bound_correlator_sum(PureState::basis(5, 0b11111)), 0.0);
}

TEST(BoundCorrelatorSum, MatchesExplicitEnumeration) {
    Rng rng(23);
    for (int n = 1; n <= 4; ++n) {
        const DensityMatrix rho = random_density_matrix(n, 2, rng);
        EXPECT_NEAR(bound_correlator_sum(rho), oracle::correlator_sum(rho.matrix(), n), 1e-12);
        const PureState psi = random_pure_state(n, rng);
        EXPECT_NEAR(bound_correlator_sum(psi), oracle::correlator_sum(oracle::projector(psi), n), 1e-12);
    }
}

TEST(BoundCorrelatorSum, DensityAndPurePathsAgree) {
    Rng rng(29);
    const PureState psi = random_pure_state(5, rng);
    EXPECT_NEAR(bound_correlator_sum(psi), bound_correlator_sum(DensityMatrix::from_pure(psi)), 1e-12);
}

TEST(BoundCorrelatorSum, SizeCapWithoutTruncation) {
    EXPECT_THROW(bound_correlator_sum(product_plus_state(15)), std::invalid_argument);
}

TEST(BoundCorrelatorSum, TruncationIsMonotoneLowerBound) {
    Rng rng(37);
    const PureState psi = random_pure_state(6, rng);
    const double full = bound_correlator_sum(psi);
    double prev = 0.0;
    for (int cap = 0; cap <= 6; ++cap) {
        const double b = bound_correlator_sum(psi, SpinTriad::z(), {cap, 1});
        EXPECT_GE(b, prev);
        EXPECT_LE(b, full + 1e-12);
        prev = b;
    }
    EXPECT_NEAR(prev, full, 1e-12);
}

TEST(BoundCorrelatorSum, ThreadCountDoesNotChangeBits) {
    Rng rng(41);
    const PureState psi = random_pure_state(9, rng);
    const double one = bound_correlator_sum(psi, SpinTriad::z(), {std::nullopt, 1});
    const double four = bound_correlator_sum(psi, SpinTriad::z(), {std::nullopt, 4});
    EXPECT_EQ(one, four);
}

TEST(BoundChain, RandomStates) {
    Rng rng(43);
    for (int rep = 0; rep < 60; ++rep) {
        const int n = 2 + rep % 5;
        const DensityMatrix rho = rep % 2 ? random_density_matrix(n, 1 + rep % 3, rng)
                                          : DensityMatrix::from_pure(random_pure_state(n, rng));
        const BoundReport r = bound_report(rho);
        EXPECT_GE(r.qfi, r.bound_trace - 1e-9);
        EXPECT_NEAR(r.bound_trace, r.bound_coherence, 1e-10);
        ASSERT_TRUE(r.bound_correlator_sum.has_value());
        EXPECT_GE(r.bound_coherence, *r.bound_correlator_sum - 1e-9);
        EXPECT_EQ(r.shot_noise, n);
        EXPECT_EQ(r.heisenberg, n * n);
    }
}

// ---------- algebraic inequality ----------

TEST(SumOfSquares, WalshHadamardIdentity) {
    // sum |a|^2 = 2^-n sum_j |(H a)_j|^2 and (H a)_0 = sum a, so dropping
    // every j > 0 term gives the inequality
    Rng rng(47);
    for (int n = 1; n <= 8; ++n) {
        const std::size_t size = std::size_t{1} << n;
        for (int rep = 0; rep < 50; ++rep) {
            std::vector<cplx> a = random_complex_set(size, rng);
            double lhs = 0.0;
            cplx sum = 0.0;
            for (const cplx& c : a) {
                lhs += std::norm(c);
                sum += c;
            }
            std::vector<cplx> h = a;
            for (std::size_t len = 1; len < size; len <<= 1)
                for (std::size_t i = 0; i < size; i += 2 * len)
                    for (std::size_t j = i; j < i + len; ++j) {
                        const cplx x = h[j], y = h[j + len];
                        h[j] = x + y;
                        h[j + len] = x - y;
                    }
            double parseval = 0.0;
            for (const cplx& c : h) parseval += std::norm(c);
            EXPECT_NEAR(parseval / double(size), lhs, 1e-10 * lhs);
            EXPECT_NEAR(std::abs(h[0] - sum), 0.0, 1e-10);
            EXPECT_GE(lhs, std::norm(sum) / double(size));
        }
    }
}

// ---------- Heisenberg implication ----------

TEST(HeisenbergImplication, Examples) {
    EXPECT_DOUBLE_EQ(heisenberg_implication(0.25, 10), 50.0);
    EXPECT_DOUBLE_EQ(heisenberg_implication(0.07, 10), 25.0);
    EXPECT_DOUBLE_EQ(heisenberg_implication(std::ldexp(1.0, -10), 10), 0.0);
}

TEST(HeisenbergImplication, NeverExceedsQfiOfGhzMixtures) {
    // p GHZ + (1 - p) maximally mixed: E_full = p^2 / 4
    for (int n = 3; n <= 6; ++n) {
        const DensityMatrix g = DensityMatrix::from_pure(ghz_state(n));
        const DensityMatrix m = DensityMatrix::maximally_mixed(n);
        for (double p : {0.1, 0.4, 0.7, 0.95, 1.0}) {
            const DensityMatrix rho(n, p * g.matrix() + (1 - p) * m.matrix());
            const double e = bell_correlator(rho, CorrelatorSpec::full(n)).value;
            EXPECT_GE(qfi_spectral(rho) + 1e-9, heisenberg_implication(e, n));
        }
    }
}

// ---------- derivative scan ----------

TEST(DerivativeScan, Constant) {
    std::vector<SeriesPoint> s;
    for (int i = 0; i < 5; ++i) s.push_back({-0.1 * i, 3.0});
    for (const auto& d : derivative_scan(s)) EXPECT_EQ(d.value, 0.0);
}

TEST(DerivativeScan, LinearInAbsU) {
    std::vector<SeriesPoint> s;
    for (int i = 0; i <= 10; ++i) s.push_back({-3.0 + 0.3 * i, std::abs(-3.0 + 0.3 * i)});
    for (const auto& d : derivative_scan(s)) EXPECT_NEAR(d.value, 1.0, 1e-12);
}

TEST(DerivativeScan, QuadraticInteriorWithinStepSquared) {
    const double h = 0.05;
    std::vector<SeriesPoint> s;
    for (int i = 0; i <= 40; ++i) {
        const double u = -2.0 + h * i;
        s.push_back({u, u * u});
    }
    const auto d = derivative_scan(s);
    for (std::size_t i = 1; i + 1 < d.size(); ++i) EXPECT_NEAR(d[i].value, 2.0 * std::abs(s[i].u), 10 * h * h);
    // one-sided ends carry an O(h) error
    EXPECT_NEAR(d.front().value, 4.0, 2 * h);
}

TEST(DerivativeScan, Errors) {
    std::vector<SeriesPoint> two{{0.0, 1.0}, {-0.1, 2.0}};
    EXPECT_THROW(derivative_scan(two), std::invalid_argument);
    std::vector<SeriesPoint> flat{{-0.1, 1.0}, {-0.1, 2.0}, {-0.3, 1.0}};
    EXPECT_THROW(derivative_scan(flat), std::invalid_argument);
    std::vector<SeriesPoint> cross{{-0.1, 1.0}, {0.0, 2.0}, {0.1, 1.0}};
    EXPECT_THROW(derivative_scan(cross), std::invalid_argument);
}
