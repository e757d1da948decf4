// Copyright 2026 The bellqfi Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file sweep.hpp
 * @brief Ground-state sweeps of the Ising and two-mode models and the
 *        versioned CSV format they are written in.
 *
 * CSV layout: a `# schema=1` comment line, a fixed header, then one row per
 * (N, u) point in N-major, u-ascending order. Floats use 17 significant
 * digits; missing values are empty. A point that fails keeps its row with
 * the message in the `error` column.
 */
#pragma once

#include "bellqfi/correlators.hpp"
#include "bellqfi/models.hpp"
#include "bellqfi/parallel.hpp"
#include "bellqfi/qfi.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bellqfi {

inline constexpr int kCsvSchema = 1;

enum class Model { ising, twomode };

struct SweepConfig {
    Model model = Model::ising;
    std::vector<int> n_list;
    double u_min = -3.0;
    double u_max = 0.0;
    std::optional<int> steps;  ///< defaults: 121 (ising), 301 (twomode)
    int threads = 1;
    std::uint64_t seed = 0;
    /// Truncate the correlator-sum bound at this order.
    std::optional<int> correlator_bound_cap;
    bool correlator_bound = true;
    IsingSolver ising_solver = IsingSolver::automatic;
    UConvention convention = UConvention::scaled;
    LanczosOptions lanczos;

    int resolved_steps() const { return steps.value_or(model == Model::ising ? 121 : 301); }
};

/// Evenly spaced grid with exact endpoints.
inline std::vector<double> u_grid(double u_min, double u_max, int steps) {
    if (steps < 1) throw std::invalid_argument("u_grid: steps must be >= 1");
    if (!(u_min <= u_max)) throw std::invalid_argument("u_grid: u_min must not exceed u_max");
    if (steps == 1) return {u_min};
    std::vector<double> g(static_cast<std::size_t>(steps));
    const double den = steps - 1;
    for (int i = 0; i < steps; ++i) g[static_cast<std::size_t>(i)] = (u_min * (den - i) + u_max * i) / den;
    return g;
}

inline constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

struct SweepRecord {
    int n = 0;
    double u = 0.0;
    double qfi = kMissing;
    double qfi_over_sn = kMissing;
    double e_full = kMissing;
    int depth = 0;
    double bound_coherence = kMissing;
    double bound_correlator_sum = kMissing;
    double heisenberg_floor = kMissing;
    double delta_theta = kMissing;
    std::string error;

    static SweepRecord at(int n, double u, std::string error = {}) {
        SweepRecord r;
        r.n = n;
        r.u = u;
        r.error = std::move(error);
        return r;
    }

    bool ok() const noexcept { return error.empty(); }
};

namespace detail {

inline void fill_common(SweepRecord& r, double qfi, double e_full) {
    r.qfi = qfi;
    r.qfi_over_sn = qfi / r.n;
    r.e_full = e_full;
    r.depth = nonlocality_depth(e_full, r.n);
    r.heisenberg_floor = heisenberg_implication(e_full, r.n);
    r.delta_theta = qfi > 0.0 ? 1.0 / std::sqrt(qfi) : kMissing;
}

}  // namespace detail

inline SweepRecord ising_point(int n, double u, const SweepConfig& cfg) {
    SweepRecord r = SweepRecord::at(n, u);
    const IsingGroundState gs = ising_ground_state({n, u}, cfg.ising_solver, cfg.lanczos);
    detail::fill_common(r, qfi_pure(gs.state), bell_correlator(gs.state, CorrelatorSpec::full(n)).value);
    r.bound_coherence = bound_coherence(gs.state);
    if (cfg.correlator_bound && (cfg.correlator_bound_cap || n <= kMaxCorrelatorSumQubits))
        r.bound_correlator_sum =
            bound_correlator_sum(gs.state, SpinTriad::z(), {cfg.correlator_bound_cap, 1});
    return r;
}

inline SweepRecord twomode_point(int n, double u, const SweepConfig& cfg) {
    SweepRecord r = SweepRecord::at(n, u);
    const TwoModeGroundState gs = two_mode_ground_state({n, u, cfg.convention});
    detail::fill_common(r, qfi_pure(gs.state), symmetric_correlator(gs.state, n, 0).value);
    r.bound_coherence = bound_coherence(gs.state);
    if (cfg.correlator_bound)
        r.bound_correlator_sum = symmetric_bound_correlator_sum(gs.state, {cfg.correlator_bound_cap, 1});
    return r;
}

/// Every (N, u) point, solved on the work pool and returned in N-major,
/// u-ascending order independent of scheduling.
inline std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
    const std::vector<double> grid = u_grid(cfg.u_min, cfg.u_max, cfg.resolved_steps());
    std::vector<SweepRecord> rows;
    for (int n : cfg.n_list)
        for (double u : grid) rows.push_back(SweepRecord::at(n, u));
    parallel_for(rows.size(), cfg.threads, [&](std::size_t i) {
        const int n = rows[i].n;
        const double u = rows[i].u;
        try {
            rows[i] = cfg.model == Model::ising ? ising_point(n, u, cfg) : twomode_point(n, u, cfg);
        } catch (const std::exception& e) {
            rows[i] = SweepRecord::at(n, u, e.what());
        }
    });
    return rows;
}

// ============================================================================
// Derivative scan
// ============================================================================

struct DerivativeRecord {
    int n = 0;
    double u = 0.0;
    double dqfi_d_abs_u = kMissing;
    double e_full = kMissing;
    bool bell_onset = false;
};

/// Marks the first point, walking outward in |u|, whose full correlator
/// violates the local bound 2^-N. Returns the index or -1.
inline std::ptrdiff_t bell_onset_index(std::span<const SweepRecord> rows) {
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(rows[a].u) < std::abs(rows[b].u);
    });
    for (std::size_t i : order) {
        const SweepRecord& r = rows[i];
        if (r.ok() && nonlocality_depth(r.e_full, r.n) > 0) return static_cast<std::ptrdiff_t>(i);
    }
    return -1;
}

inline std::vector<DerivativeRecord> derivative_records(std::span<const SweepRecord> rows) {
    std::vector<DerivativeRecord> out;
    std::size_t begin = 0;
    while (begin < rows.size()) {
        std::size_t end = begin;
        while (end < rows.size() && rows[end].n == rows[begin].n) ++end;
        const std::span<const SweepRecord> block = rows.subspan(begin, end - begin);
        std::vector<SeriesPoint> series;
        for (const SweepRecord& r : block) series.push_back({r.u, r.qfi});
        const std::vector<SeriesPoint> d = derivative_scan(series);
        const std::ptrdiff_t onset = bell_onset_index(block);
        for (std::size_t i = 0; i < block.size(); ++i)
            out.push_back({block[i].n, block[i].u, d[i].value, block[i].e_full,
                           static_cast<std::ptrdiff_t>(i) == onset});
        begin = end;
    }
    return out;
}

inline std::vector<DerivativeRecord> run_derivative_scan(const SweepConfig& cfg) {
    if (cfg.resolved_steps() < 3) throw std::invalid_argument("derivative scan needs >= 3 grid points");
    SweepConfig c = cfg;
    c.correlator_bound = false;
    const std::vector<SweepRecord> rows = run_sweep(c);
    return derivative_records(rows);
}

// ============================================================================
// CSV
// ============================================================================

/// Shortest decimal with 17 significant digits; NaN becomes empty.
inline std::string format_double(double v) {
    if (std::isnan(v)) return {};
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return {buf, res.ptr};
}

namespace detail {

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c == '\n' ? ' ' : c;
    }
    return out + '"';
}

}  // namespace detail

inline constexpr const char* kSweepHeader =
    "n,u,qfi,qfi_over_sn,e_full,depth,bound_coherence,bound_correlator_sum,"
    "heisenberg_floor,delta_theta,error";
inline constexpr const char* kDerivativeHeader = "n,u,dqfi_d_abs_u,e_full,bell_onset_flag";

inline void write_sweep_csv(std::ostream& os, std::span<const SweepRecord> rows) {
    os << "# schema=" << kCsvSchema << '\n' << kSweepHeader << '\n';
    for (const SweepRecord& r : rows) {
        os << r.n << ',' << format_double(r.u) << ',' << format_double(r.qfi) << ','
           << format_double(r.qfi_over_sn) << ',' << format_double(r.e_full) << ',';
        if (r.ok()) os << r.depth;
        os << ',' << format_double(r.bound_coherence) << ','
           << format_double(r.bound_correlator_sum) << ',' << format_double(r.heisenberg_floor)
           << ',' << format_double(r.delta_theta) << ',' << detail::csv_escape(r.error) << '\n';
    }
}

inline void write_derivative_csv(std::ostream& os, std::span<const DerivativeRecord> rows) {
    os << "# schema=" << kCsvSchema << '\n' << kDerivativeHeader << '\n';
    for (const DerivativeRecord& r : rows)
        os << r.n << ',' << format_double(r.u) << ',' << format_double(r.dqfi_d_abs_u) << ','
           << format_double(r.e_full) << ',' << (r.bell_onset ? 1 : 0) << '\n';
}

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <class Writer>
void write_file(const std::string& path, Writer&& writer) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    writer(f);
    f.flush();
    if (!f) throw IoError("write to '" + path + "' failed");
}

inline std::vector<SweepRecord> run_ising_sweep(const std::vector<int>& n_list, double u_min,
                                                double u_max, int steps, const std::string& out_path,
                                                SweepConfig cfg = {}) {
    cfg.model = Model::ising;
    cfg.n_list = n_list;
    cfg.u_min = u_min;
    cfg.u_max = u_max;
    cfg.steps = steps;
    auto rows = run_sweep(cfg);
    write_file(out_path, [&](std::ostream& os) { write_sweep_csv(os, rows); });
    return rows;
}

inline std::vector<SweepRecord> run_two_mode_sweep(const std::vector<int>& n_list, double u_min,
                                                   double u_max, int steps,
                                                   const std::string& out_path,
                                                   SweepConfig cfg = {}) {
    cfg.model = Model::twomode;
    cfg.n_list = n_list;
    cfg.u_min = u_min;
    cfg.u_max = u_max;
    cfg.steps = steps;
    auto rows = run_sweep(cfg);
    write_file(out_path, [&](std::ostream& os) { write_sweep_csv(os, rows); });
    return rows;
}

}  // namespace bellqfi
