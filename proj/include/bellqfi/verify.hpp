// Copyright 2026 The bellqfi Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file verify.hpp
 * @brief Seeded property batteries over every module. The report is a pure
 *        function of the seed (no timings), so repeated runs are
 *        byte-identical.
 */
#pragma once

#include "bellqfi/correlators.hpp"
#include "bellqfi/hilbert.hpp"
#include "bellqfi/models.hpp"
#include "bellqfi/qfi.hpp"
#include "bellqfi/random.hpp"
#include "bellqfi/sweep.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace bellqfi {

struct PropertyResult {
    std::string name;
    bool passed = false;
    double worst = 0.0;      ///< largest observed error or violation
    double tolerance = 0.0;  ///< pass iff worst <= tolerance
    int cases = 0;
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::vector<PropertyResult> properties;

    bool all_passed() const {
        return std::all_of(properties.begin(), properties.end(),
                           [](const PropertyResult& p) { return p.passed; });
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["seed"] = seed;
        j["all_passed"] = all_passed();
        j["properties"] = nlohmann::ordered_json::array();
        for (const PropertyResult& p : properties) {
            j["properties"].push_back({{"name", p.name},
                                       {"passed", p.passed},
                                       {"cases", p.cases},
                                       {"worst", format_double(p.worst)},
                                       {"tolerance", format_double(p.tolerance)}});
        }
        return j;
    }
};

struct VerifyOptions {
    /// Negates every tolerance: a negative control that must fail.
    bool inject_failure = false;
};

namespace detail {

/// Running maximum of an error measure against a fixed tolerance.
class Tally {
public:
    Tally(std::string name, double tol, const VerifyOptions& opt)
        : name_(std::move(name)), tol_(opt.inject_failure ? -std::abs(tol) - 1.0 : tol) {}

    /// Signed inequality margins are clamped at zero, so worst_ is the
    /// largest violation and stays above any injected tolerance.
    void observe(double err) {
        ++cases_;
        if (std::isnan(err)) nan_ = true;
        else worst_ = std::max(worst_, err);
    }

    PropertyResult result() const {
        return {name_, !nan_ && worst_ <= tol_, worst_, tol_, cases_};
    }

private:
    std::string name_;
    double tol_;
    double worst_ = 0.0;
    int cases_ = 0;
    bool nan_ = false;
};

inline double max_abs_diff(const PureState& a, const PureState& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline SpinTriad random_triad(Rng& rng) {
    std::normal_distribution<double> g;
    Vec3 v{g(rng), g(rng), g(rng)};
    return SpinTriad::along(v);
}

/// Two-mode Hamiltonian assembled in the full 2^N space from Pauli operators.
inline Eigen::MatrixXcd two_mode_full_space(const TwoModeParams& p) {
    const Eigen::MatrixXcd jx = collective_generator_matrix(p.n_atoms, SpinTriad::x());
    const Eigen::MatrixXcd jz = collective_generator_matrix(p.n_atoms, SpinTriad::z());
    return -jx + p.coupling() * jz * jz;
}

// ---------------------------------------------------------------------------

inline PropertyResult check_pauli_algebra(Rng& rng, const VerifyOptions& opt) {
    Tally t("pauli_algebra", 1e-12, opt);
    constexpr cplx I{0.0, 1.0};
    for (int n = 1; n <= 4; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            const PureState psi = random_pure_state(n, rng);
            for (int k = 0; k < n; ++k) {
                for (Axis a : {Axis::x, Axis::y, Axis::z})
                    t.observe(max_abs_diff(pauli_apply(a, k, pauli_apply(a, k, psi)), psi));
                const PureState xy = pauli_apply(Axis::x, k, pauli_apply(Axis::y, k, psi));
                const PureState yx = pauli_apply(Axis::y, k, pauli_apply(Axis::x, k, psi));
                const PureState z = pauli_apply(Axis::z, k, psi);
                double m = 0.0;
                for (std::size_t b = 0; b < psi.dim(); ++b)
                    m = std::max(m, std::abs(xy[b] - yx[b] - 2.0 * I * z[b]));
                t.observe(m);
            }
        }
    }
    return t.result();
}

inline PropertyResult check_ladder_projector(const VerifyOptions& opt) {
    Tally t("ladder_projector", 0.0, opt);
    for (int n = 1; n <= 2; ++n) {
        const Mask full = full_mask(n);
        for (Mask plus = 0; plus <= full; ++plus) {
            for (Mask minus = 0; minus <= full; ++minus) {
                if (plus & minus) continue;
                const auto fwd = CorrelatorSpec::from_masks(plus, minus);
                const auto back = CorrelatorSpec::from_masks(minus, plus);
                for (Mask b = 0; b <= full; ++b) {
                    const PureState e = PureState::basis(n, b);
                    const PureState once = ladder_apply(back, ladder_apply(fwd, e));
                    const PureState twice = ladder_apply(back, ladder_apply(fwd, once));
                    t.observe(max_abs_diff(once, twice));
                }
            }
        }
    }
    return t.result();
}

inline PropertyResult check_generator_trace_free(const VerifyOptions& opt) {
    Tally t("generator_trace_free", 0.0, opt);
    for (int n = 1; n <= 16; ++n) {
        double s = 0.0;
        for (Mask b = 0; b < hilbert_dim(n); ++b) s += generator_eigenvalue(b, n);
        t.observe(std::abs(s));
    }
    return t.result();
}

inline PropertyResult check_correlator_range(Rng& rng, const VerifyOptions& opt) {
    Tally t("correlator_range", 1e-12, opt);
    for (int rep = 0; rep < 40; ++rep) {
        const int n = 2 + rep % 3;
        const PureState psi = random_pure_state(n, rng);
        const DensityMatrix rho = random_density_matrix(n, 1 + rep % 4, rng);
        const Mask full = full_mask(n);
        for (Mask plus = 0; plus <= full; ++plus) {
            for (Mask minus = 0; minus <= full; ++minus) {
                if ((plus & minus) || (plus | minus) == 0) continue;
                const auto spec = CorrelatorSpec::from_masks(plus, minus);
                for (double e : {bell_correlator(psi, spec).value, bell_correlator(rho, spec).value}) {
                    t.observe(e - 0.25);
                    t.observe(-e);
                }
            }
        }
    }
    return t.result();
}

/// Product and GHZ states: E depends on (n+, n-) only.
inline PropertyResult check_correlator_permutation_symmetry(const VerifyOptions& opt) {
    Tally t("correlator_permutation_symmetry", 1e-12, opt);
    for (int n = 1; n <= 6; ++n) {
        for (const PureState& psi : {product_plus_state(n), ghz_state(n)}) {
            const Mask full = full_mask(n);
            for (Mask plus = 0; plus <= full; ++plus) {
                for (Mask minus = 0; minus <= full; ++minus) {
                    if (plus & minus) continue;
                    const int np = n_up(plus), nm = n_up(minus);
                    const Mask cp = full_mask(np);
                    const Mask cm = full_mask(np + nm) & ~cp;
                    const double e = bell_correlator(psi, CorrelatorSpec::from_masks(plus, minus)).value;
                    const double ref = bell_correlator(psi, CorrelatorSpec::from_masks(cp, cm)).value;
                    t.observe(std::abs(e - ref));
                }
            }
        }
    }
    return t.result();
}

inline PropertyResult check_correlator_swap_symmetry(Rng& rng, const VerifyOptions& opt) {
    Tally t("correlator_swap_symmetry_real_states", 1e-12, opt);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 1 + rep % 4;
        const PureState psi = random_real_state(n, rng);
        const Mask full = full_mask(n);
        for (Mask plus = 0; plus <= full; ++plus)
            for (Mask minus = 0; minus <= full; ++minus) {
                if (plus & minus) continue;
                const double a = bell_correlator(psi, CorrelatorSpec::from_masks(plus, minus)).value;
                const double b = bell_correlator(psi, CorrelatorSpec::from_masks(minus, plus)).value;
                t.observe(std::abs(a - b));
            }
    }
    return t.result();
}

inline PropertyResult check_depth_ladder(const VerifyOptions& opt) {
    Tally t("depth_ladder_consistency", 0.0, opt);
    for (int n = 3; n <= 40; ++n) {
        t.observe(std::abs(depth_threshold(n, n) - 0.125));
        t.observe(std::abs(depth_threshold(n - 1, n) - 0.0625));
        t.observe(std::abs(depth_threshold(3, n) - std::ldexp(1.0, -n)));
        // just above each threshold the ladder reports exactly that depth
        for (int d = 3; d <= n; ++d) {
            const int got = nonlocality_depth(depth_threshold(d, n) * 1.001, n);
            t.observe(std::abs(got - d));
            const int at = nonlocality_depth(depth_threshold(d, n), n);
            t.observe(std::abs(at - (d == 3 ? 0 : d - 1)));
        }
    }
    return t.result();
}

// Slack for inequalities in the bound chain.
inline constexpr double kChainSlack = 1e-9;

inline std::vector<PropertyResult> check_bound_chain(Rng& rng, const VerifyOptions& opt) {
    Tally chain1("bound_chain_qfi_ge_trace", kChainSlack, opt);
    Tally equal("bound_trace_equals_coherence", 1e-10, opt);
    Tally chain2("bound_chain_coherence_ge_correlator_sum", kChainSlack, opt);
    std::uniform_int_distribution<int> pick_n(2, 6);
    for (int rep = 0; rep < 500; ++rep) {
        const int n = pick_n(rng);
        const bool pure = rep % 2 == 0;
        const DensityMatrix rho = pure ? DensityMatrix::from_pure(random_pure_state(n, rng))
                                       : random_density_matrix(n, 1 + rep % 7, rng);
        const SpinTriad axis = rep % 4 < 2 ? SpinTriad::z() : random_triad(rng);
        const double f = qfi_spectral(rho, axis);
        const double tr = bound_trace(rho, axis);
        const double co = bound_coherence(rho, axis);
        const double cs = bound_correlator_sum(rho, axis);
        chain1.observe(tr - f);
        equal.observe(std::abs(tr - co));
        chain2.observe(cs - co);
    }
    return {chain1.result(), equal.result(), chain2.result()};
}

inline PropertyResult check_pure_consistency(Rng& rng, const VerifyOptions& opt) {
    Tally t("pure_state_qfi_consistency", 1e-9, opt);
    for (int rep = 0; rep < 60; ++rep) {
        const int n = 1 + rep % 6;
        const PureState psi = random_pure_state(n, rng);
        const SpinTriad axis = rep % 2 == 0 ? SpinTriad::z() : random_triad(rng);
        const DensityMatrix rho = DensityMatrix::from_pure(psi);
        const double fp = qfi_pure(psi, axis);
        t.observe(std::abs(qfi_spectral(rho, axis) - fp));
        t.observe(std::abs(bound_trace(rho, axis) - fp));
        t.observe(std::abs(bound_coherence(psi, axis) - fp));
    }
    return t.result();
}

/// sum |a_i|^2 >= 2^-n |sum a_i|^2 over 2^n complex numbers, relative violation.
inline PropertyResult check_algebraic_inequality(Rng& rng, const VerifyOptions& opt) {
    Tally t("sum_of_squares_inequality", 1e-12, opt);
    for (int n = 1; n <= 8; ++n) {
        const std::size_t size = std::size_t{1} << n;
        for (int rep = 0; rep < 1000; ++rep) {
            const std::vector<cplx> a = random_complex_set(size, rng);
            double lhs = 0.0;
            cplx sum = 0.0;
            for (const cplx& c : a) {
                lhs += std::norm(c);
                sum += c;
            }
            const double rhs = std::norm(sum) / static_cast<double>(size);
            t.observe((rhs - lhs) / lhs);
        }
        // equality when every entry is the same
        const cplx c = random_gaussian(rng);
        const std::vector<cplx> same(size, c);
        double lhs = 0.0;
        cplx sum = 0.0;
        for (const cplx& x : same) {
            lhs += std::norm(x);
            sum += x;
        }
        t.observe(std::abs(lhs - std::norm(sum) / static_cast<double>(size)) / lhs);
    }
    return t.result();
}

inline PropertyResult check_product_saturation(const VerifyOptions& opt) {
    Tally t("product_state_saturation", 1e-9, opt);
    for (int n = 1; n <= 10; ++n) {
        const PureState p = product_plus_state(n);
        t.observe(std::abs(qfi_pure(p) - n));
        t.observe(std::abs(bound_correlator_sum(p) - n));
    }
    return t.result();
}

inline PropertyResult check_ghz_exactness(const VerifyOptions& opt) {
    Tally t("ghz_exactness", 1e-9, opt);
    for (int n : {2, 4, 8, 12}) {
        const PureState g = ghz_state(n);
        t.observe(std::abs(bell_correlator(g, CorrelatorSpec::full(n)).value - 0.25));
        t.observe(std::abs(qfi_pure(g) - double(n) * n));
    }
    return t.result();
}

inline PropertyResult check_dicke_full_agreement(const VerifyOptions& opt) {
    Tally t("dicke_vs_full_space", 1e-8, opt);
    const int n = 6;
    for (double u : {0.0, -0.7, -1.3, -3.0, 0.8}) {
        const TwoModeParams p{n, u};
        const TwoModeGroundState gs = two_mode_ground_state(p);
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(two_mode_full_space(p));
        t.observe(std::abs(es.eigenvalues()(0) - gs.energy));
        const PureState full = dicke_to_full(gs.state);
        t.observe(std::abs(qfi_pure(full) - qfi_pure(gs.state)));
        t.observe(std::abs(bell_correlator(full, CorrelatorSpec::full(n)).value -
                           symmetric_correlator(gs.state, n, 0).value));
        t.observe(std::abs(bound_correlator_sum(full) - symmetric_bound_correlator_sum(gs.state)));
    }
    return t.result();
}

inline PropertyResult check_symmetric_correlator(Rng& rng, const VerifyOptions& opt) {
    Tally t("symmetric_correlator_vs_full_space", 1e-12, opt);
    for (int n = 1; n <= 8; ++n) {
        const DickeState d = random_dicke_state(n, rng);
        const PureState full = dicke_to_full(d);
        for (int np = 0; np <= n; ++np)
            for (int nm = 0; np + nm <= n; ++nm) {
                const auto spec = CorrelatorSpec::from_masks(full_mask(np), full_mask(np + nm) & ~full_mask(np));
                t.observe(std::abs(bell_correlator(full, spec).value - symmetric_correlator(d, np, nm).value));
            }
    }
    return t.result();
}

inline PropertyResult check_ising_ground_state(Rng& rng, const VerifyOptions& opt) {
    Tally t("ising_parity_and_variational", 1e-9, opt);
    const int n = 8;
    for (double u : {-0.5, -2.0}) {
        const IsingParams p{n, u};
        const IsingGroundState gs = ising_ground_state(p);
        t.observe(std::abs(parity_expectation(gs.state) - 1.0));
        t.observe(std::abs(energy_expectation(p, gs.state) - gs.energy));
        for (int rep = 0; rep < 100; ++rep)
            t.observe(gs.energy - energy_expectation(p, random_pure_state(n, rng)));
    }
    return t.result();
}

inline PropertyResult check_dense_vs_lanczos(const VerifyOptions& opt) {
    Tally t("ising_dense_vs_lanczos", 1e-8, opt);
    const int n = 10;
    for (double u : {-0.5, -1.0, -3.0}) {
        const IsingGroundState a = ising_ground_state({n, u}, IsingSolver::dense);
        const IsingGroundState b = ising_ground_state({n, u}, IsingSolver::lanczos);
        t.observe(std::abs(a.energy - b.energy));
        t.observe(std::abs(bell_correlator(a.state, CorrelatorSpec::full(n)).value -
                           bell_correlator(b.state, CorrelatorSpec::full(n)).value));
    }
    return t.result();
}

inline std::vector<PropertyResult> check_sweep_rows(const VerifyOptions& opt) {
    Tally floor("heisenberg_floor_on_sweeps", 1e-6, opt);
    Tally chain("sweep_row_bound_chain", 1e-6, opt);
    SweepConfig ising;
    ising.n_list = {6, 8};
    ising.steps = 13;
    SweepConfig twomode;
    twomode.model = Model::twomode;
    twomode.n_list = {20, 50};
    twomode.steps = 31;
    for (const SweepConfig& cfg : {ising, twomode}) {
        for (const SweepRecord& r : run_sweep(cfg)) {
            floor.observe(r.heisenberg_floor - r.qfi);
            chain.observe(r.bound_coherence - r.qfi);
            chain.observe(r.bound_correlator_sum - r.bound_coherence);
        }
    }
    return {floor.result(), chain.result()};
}

}  // namespace detail

inline VerifyReport verify_suite(std::uint64_t seed, const VerifyOptions& opt = {}) {
    VerifyReport rep;
    rep.seed = seed;
    // one stream per battery so adding a battery never reshuffles the others
    auto rng = [&](std::uint64_t salt) { return Rng(seed * 0x9E3779B97F4A7C15ULL + salt); };
    auto add = [&](PropertyResult r) { rep.properties.push_back(std::move(r)); };
    auto add_all = [&](std::vector<PropertyResult> rs) {
        for (auto& r : rs) rep.properties.push_back(std::move(r));
    };
    {
        auto r = rng(1);
        add(detail::check_pauli_algebra(r, opt));
    }
    add(detail::check_ladder_projector(opt));
    add(detail::check_generator_trace_free(opt));
    {
        auto r = rng(2);
        add(detail::check_correlator_range(r, opt));
    }
    add(detail::check_correlator_permutation_symmetry(opt));
    {
        auto r = rng(3);
        add(detail::check_correlator_swap_symmetry(r, opt));
    }
    add(detail::check_depth_ladder(opt));
    {
        auto r = rng(4);
        add_all(detail::check_bound_chain(r, opt));
    }
    {
        auto r = rng(5);
        add(detail::check_pure_consistency(r, opt));
    }
    {
        auto r = rng(6);
        add(detail::check_algebraic_inequality(r, opt));
    }
    add(detail::check_product_saturation(opt));
    add(detail::check_ghz_exactness(opt));
    add(detail::check_dicke_full_agreement(opt));
    {
        auto r = rng(7);
        add(detail::check_symmetric_correlator(r, opt));
    }
    {
        auto r = rng(8);
        add(detail::check_ising_ground_state(r, opt));
    }
    add(detail::check_dense_vs_lanczos(opt));
    add_all(detail::check_sweep_rows(opt));
    return rep;
}

}  // namespace bellqfi
