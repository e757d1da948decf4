// Copyright 2026 The bellqfi Authors
// SPDX-License-Identifier: Apache-2.0

#include "bellqfi/correlators.hpp"
#include "bellqfi/random.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace bellqfi;

TEST(BellCorrelator, GhzFullCorrelatorIsQuarter) {
    for (int n = 1; n <= 12; ++n) {
        const PureState g = ghz_state(n);
        const auto all = SiteSet::range(0, n);
        EXPECT_NEAR(bell_correlator(g, {all, {}}).value, 0.25, 1e-12);
        EXPECT_NEAR(bell_correlator(g, {{}, all}).value, 0.25, 1e-12);
    }
}

TEST(BellCorrelator, ProductStateIsQuarterToTheOrder) {
    for (int n = 1; n <= 6; ++n) {
        const PureState p = product_plus_state(n);
        const Mask full = full_mask(n);
        for (Mask plus = 0; plus <= full; ++plus)
            for (Mask minus = 0; minus <= full; ++minus) {
                if (plus & minus) continue;
                const auto r = bell_correlator(p, CorrelatorSpec::from_masks(plus, minus));
                EXPECT_NEAR(r.value, std::pow(0.25, r.order), 1e-14);
                EXPECT_NEAR(r.value, r.entanglement_threshold(), 1e-14);
            }
    }
}

TEST(BellCorrelator, GhzHasNoTwoPointCoherence) {
    // frozen from the Kronecker oracle
    const PureState g = ghz_state(4);
    EXPECT_NEAR(oracle::correlator(oracle::projector(g), 0b0001, 0b0010, 4), 0.0, 1e-15);
    EXPECT_NEAR(bell_correlator(g, CorrelatorSpec({0}, {1})).value, 0.0, 1e-15);
}

TEST(BellCorrelator, MatchesOracleForPureAndMixed) {
    Rng rng(21);
    for (int n = 1; n <= 4; ++n) {
        const PureState psi = random_pure_state(n, rng);
        const DensityMatrix rho = random_density_matrix(n, 3, rng);
        const oracle::Mat rp = oracle::projector(psi);
        const Mask full = full_mask(n);
        for (Mask plus = 0; plus <= full; ++plus)
            for (Mask minus = 0; minus <= full; ++minus) {
                if (plus & minus) continue;
                const auto spec = CorrelatorSpec::from_masks(plus, minus);
                EXPECT_NEAR(bell_correlator(psi, spec).value, oracle::correlator(rp, plus, minus, n), 1e-13);
                EXPECT_NEAR(bell_correlator(rho, spec).value,
                            oracle::correlator(rho.matrix(), plus, minus, n), 1e-13);
            }
    }
}

TEST(BellCorrelator, WithinQuarterForRandomStates) {
    Rng rng(4);
    for (int rep = 0; rep < 30; ++rep) {
        const int n = 2 + rep % 4;
        const PureState psi = random_pure_state(n, rng);
        const Mask full = full_mask(n);
        for (Mask plus = 0; plus <= full; ++plus)
            for (Mask minus = 0; minus <= full; ++minus) {
                if ((plus & minus) || !(plus | minus)) continue;
                const double e = bell_correlator(psi, CorrelatorSpec::from_masks(plus, minus)).value;
                EXPECT_GE(e, 0.0);
                EXPECT_LE(e, 0.25 + 1e-12);
            }
    }
}

TEST(BellCorrelator, SwapSymmetricForRealStates) {
    Rng rng(9);
    for (int n = 1; n <= 4; ++n) {
        const PureState psi = random_real_state(n, rng);
        const Mask full = full_mask(n);
        for (Mask plus = 0; plus <= full; ++plus)
            for (Mask minus = 0; minus <= full; ++minus) {
                if (plus & minus) continue;
                EXPECT_NEAR(bell_correlator(psi, CorrelatorSpec::from_masks(plus, minus)).value,
                            bell_correlator(psi, CorrelatorSpec::from_masks(minus, plus)).value, 1e-12);
            }
    }
}

TEST(BellCorrelator, SpecLargerThanRegisterRejected) {
    EXPECT_THROW(bell_correlator(ghz_state(2), CorrelatorSpec({0, 2}, {})), std::invalid_argument);
}

TEST(BellCorrelator, ResultLimits) {
    const CorrelatorResult r{0.3 * 0.25, 2};
    EXPECT_DOUBLE_EQ(r.bell_limit(), 0.25);
    EXPECT_DOUBLE_EQ(r.entanglement_threshold(), 0.0625);
    EXPECT_TRUE(r.exceeds_entanglement_threshold());
    EXPECT_FALSE(r.exceeds_bell_limit());
}

// ---------- depth ladder ----------

TEST(NonlocalityDepth, LadderExamples) {
    EXPECT_EQ(nonlocality_depth(0.25, 8), 8);
    EXPECT_EQ(nonlocality_depth(0.07, 8), 7);
    EXPECT_EQ(nonlocality_depth(std::ldexp(1.0, -8), 8), 0);
    EXPECT_EQ(nonlocality_depth(1.01 * std::ldexp(1.0, -8), 8), 3);
}

TEST(NonlocalityDepth, ThresholdsMatchLadder) {
    for (int n = 3; n <= 30; ++n) {
        EXPECT_EQ(depth_threshold(n, n), 0.125);
        EXPECT_EQ(depth_threshold(n - 1, n), 0.0625);
        EXPECT_EQ(depth_threshold(3, n), std::ldexp(1.0, -n));
    }
}

TEST(NonlocalityDepth, BoundaryValueDoesNotOverclaim) {
    EXPECT_EQ(nonlocality_depth(0.125, 8), 7);
    EXPECT_EQ(nonlocality_depth(0.125 * (1 + 1e-13), 8), 7);
    EXPECT_EQ(nonlocality_depth(0.125 * (1 + 1e-9), 8), 8);
}

TEST(NonlocalityDepth, TinyThresholdsAtLargeN) {
    // relative slack keeps 2^-150 resolvable
    EXPECT_EQ(nonlocality_depth(std::ldexp(1.0, -150), 150), 0);
    EXPECT_EQ(nonlocality_depth(std::ldexp(1.5, -150), 150), 3);
}

TEST(NonlocalityDepth, InvalidCorrelatorRejected) {
    EXPECT_THROW(nonlocality_depth(0.26, 8), std::invalid_argument);
    EXPECT_THROW(nonlocality_depth(-0.1, 8), std::invalid_argument);
    EXPECT_NO_THROW(nonlocality_depth(0.25 + 1e-13, 8));
}

TEST(NonlocalityDepth, SmallRegistersNeverWitness) {
    EXPECT_EQ(nonlocality_depth(0.25, 2), 0);
    EXPECT_EQ(nonlocality_depth(0.25, 1), 0);
}
