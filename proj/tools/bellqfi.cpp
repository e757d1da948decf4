// Copyright 2026 The bellqfi Authors
// SPDX-License-Identifier: Apache-2.0

// bellqfi: model sweeps, QFI derivative scans and the property verification
// suite. Exit codes: 0 success, 1 bad arguments or config, 2 I/O failure,
// 3 verification failure.

#include "bellqfi/sweep.hpp"
#include "bellqfi/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

enum ExitCode { kOk = 0, kBadArgs = 1, kIoFailure = 2, kVerifyFailure = 3 };

struct Args {
    std::string config;
    std::string model = "ising";
    std::vector<int> n;
    double u_min = -3.0;
    double u_max = 0.0;
    int steps = 0;
    std::string out;
    int threads = 1;
    std::uint64_t seed = 0;
    int cap = -1;
    bool no_bound = false;
    std::string solver = "auto";
    std::string u_convention = "scaled";
    bool inject_failure = false;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void add_common(CLI::App& app, Args& a) {
    app.add_option("--config", a.config, "flat JSON object mirroring these flags");
    app.add_option("--model", a.model, "ising | twomode")->check(CLI::IsMember({"ising", "twomode"}));
    app.add_option("--n", a.n, "system size (repeatable or comma separated)")->delimiter(',');
    app.add_option("--u-min", a.u_min, "lower end of the coupling grid");
    app.add_option("--u-max", a.u_max, "upper end of the coupling grid");
    app.add_option("--steps", a.steps, "grid points (default 121 ising, 301 twomode)");
    app.add_option("--out", a.out, "output CSV path");
    app.add_option("--threads", a.threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", a.seed, "random seed");
    app.add_option("--correlator-bound-cap", a.cap,
                   "truncate the correlator-sum bound at this order");
    app.add_flag("--no-correlator-bound", a.no_bound, "skip the correlator-sum bound column");
    app.add_option("--solver", a.solver, "Ising solver: auto | dense | lanczos")
        ->check(CLI::IsMember({"auto", "dense", "lanczos"}));
    app.add_option("--u-convention", a.u_convention,
                   "two-mode coupling: scaled (U = u/N) | raw (U = u)")
        ->check(CLI::IsMember({"scaled", "raw"}));
}

/// Fills every option not given on the command line from the config file.
void merge_config(const CLI::App& app, Args& a) {
    if (a.config.empty()) return;
    std::ifstream f(a.config);
    if (!f) throw ConfigError("cannot read config '" + a.config + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(f);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a flat JSON object");
    static const std::set<std::string> known = {
        "model", "n", "u-min", "u-max", "steps", "out", "threads", "seed",
        "correlator-bound-cap", "no-correlator-bound", "solver", "u-convention"};
    try {
        for (const auto& [key, value] : j.items()) {
            if (!known.count(key)) throw ConfigError("unknown config key '" + key + "'");
            if (app.count("--" + key) != 0) continue;
            if (key == "model") a.model = value.get<std::string>();
            else if (key == "n") a.n = value.is_array() ? value.get<std::vector<int>>()
                                                       : std::vector<int>{value.get<int>()};
            else if (key == "u-min") a.u_min = value.get<double>();
            else if (key == "u-max") a.u_max = value.get<double>();
            else if (key == "steps") a.steps = value.get<int>();
            else if (key == "out") a.out = value.get<std::string>();
            else if (key == "threads") a.threads = value.get<int>();
            else if (key == "seed") a.seed = value.get<std::uint64_t>();
            else if (key == "correlator-bound-cap") a.cap = value.get<int>();
            else if (key == "no-correlator-bound") a.no_bound = value.get<bool>();
            else if (key == "solver") a.solver = value.get<std::string>();
            else if (key == "u-convention") a.u_convention = value.get<std::string>();
            else throw ConfigError("unknown config key '" + key + "'");
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config value has the wrong type: ") + e.what());
    }
}

bellqfi::SweepConfig to_config(const Args& a) {
    bellqfi::SweepConfig c;
    if (a.model == "ising") c.model = bellqfi::Model::ising;
    else if (a.model == "twomode") c.model = bellqfi::Model::twomode;
    else throw ConfigError("unknown model '" + a.model + "'");
    if (a.n.empty()) throw ConfigError("at least one --n is required");
    c.n_list = a.n;
    c.u_min = a.u_min;
    c.u_max = a.u_max;
    if (a.steps != 0) c.steps = a.steps;
    if (a.threads < 1) throw ConfigError("--threads must be positive");
    c.threads = a.threads;
    c.seed = a.seed;
    if (a.cap >= 0) c.correlator_bound_cap = a.cap;
    c.correlator_bound = !a.no_bound;
    if (a.solver == "dense") c.ising_solver = bellqfi::IsingSolver::dense;
    else if (a.solver == "lanczos") c.ising_solver = bellqfi::IsingSolver::lanczos;
    else if (a.solver == "auto") c.ising_solver = bellqfi::IsingSolver::automatic;
    else throw ConfigError("unknown solver '" + a.solver + "'");
    if (a.u_convention == "raw") c.convention = bellqfi::UConvention::raw;
    else if (a.u_convention == "scaled") c.convention = bellqfi::UConvention::scaled;
    else throw ConfigError("unknown u-convention '" + a.u_convention + "'");
    for (int n : c.n_list) {
        const bool ok = c.model == bellqfi::Model::ising ? (n >= 2 && n <= 20) : (n >= 1 && n <= 2000);
        if (!ok) throw ConfigError("N = " + std::to_string(n) + " is outside the model's range");
    }
    if (!(c.u_min <= c.u_max)) throw ConfigError("--u-min must not exceed --u-max");
    if (c.resolved_steps() < 1) throw ConfigError("--steps must be positive");
    if (a.out.empty()) throw ConfigError("--out is required");
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bell correlators, QFI bounds and ground-state sweeps"};
    app.require_subcommand(1);

    Args sweep_args, deriv_args, verify_args;
    CLI::App* sweep = app.add_subcommand("sweep", "ground-state sweep of one model, written as CSV");
    add_common(*sweep, sweep_args);
    CLI::App* deriv = app.add_subcommand("derivative", "dF/d|u| scan with Bell-onset markers");
    add_common(*deriv, deriv_args);
    deriv_args.model = "twomode";
    CLI::App* verify = app.add_subcommand("verify", "run the property batteries");
    verify->add_option("--seed", verify_args.seed, "random seed");
    verify->add_option("--out", verify_args.out, "JSON report path")->required();
    verify->add_flag("--inject-failure", verify_args.inject_failure,
                     "negative control: corrupt every tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kBadArgs;
    }

    try {
        if (*verify) {
            const bellqfi::VerifyReport rep =
                bellqfi::verify_suite(verify_args.seed, {verify_args.inject_failure});
            bellqfi::write_file(verify_args.out,
                                [&](std::ostream& os) { os << rep.to_json().dump(2) << '\n'; });
            for (const auto& p : rep.properties)
                std::cout << (p.passed ? "PASS " : "FAIL ") << p.name << '\n';
            return rep.all_passed() ? kOk : kVerifyFailure;
        }
        if (*sweep) {
            merge_config(*sweep, sweep_args);
            const bellqfi::SweepConfig cfg = to_config(sweep_args);
            const auto rows = bellqfi::run_sweep(cfg);
            bellqfi::write_file(sweep_args.out,
                                [&](std::ostream& os) { bellqfi::write_sweep_csv(os, rows); });
            std::size_t failed = 0;
            for (const auto& r : rows) failed += r.ok() ? 0 : 1;
            if (failed != 0) std::cerr << failed << " point(s) failed; see the error column\n";
            return kOk;
        }
        if (*deriv) {
            merge_config(*deriv, deriv_args);
            const bellqfi::SweepConfig cfg = to_config(deriv_args);
            const auto rows = bellqfi::run_derivative_scan(cfg);
            bellqfi::write_file(deriv_args.out,
                                [&](std::ostream& os) { bellqfi::write_derivative_csv(os, rows); });
            return kOk;
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadArgs;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadArgs;
    } catch (const bellqfi::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoFailure;
    }
    return kBadArgs;
}
