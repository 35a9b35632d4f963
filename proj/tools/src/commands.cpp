// Copyright 2026 The tripleunc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tripleunc_cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <limits>

#include "CLI11.hpp"
#include "tripleunc/tripleunc.hpp"

namespace tripleunc::cli {

namespace {

constexpr const char *kVersion = "0.1.0";
constexpr std::size_t kMaxVerifyDim = 32;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Json header(const char *command) {
    return Json{{"tool", "tripleunc"}, {"version", kVersion}, {"command", command}};
}

// ---------------------------------------------------------------- verify

struct TrialOutcome {
    double slack;
    double tolerance;
    bool pass() const { return slack >= -tolerance; }
};

QuantumState trial_state(std::uint64_t seed, std::size_t dim, std::size_t trial) {
    const SampleConfig cfg{seed, dim, {}, 1.0};
    return trial % 2 == 0 ? haar_pure(cfg) : ginibre_density(cfg);
}

TrialOutcome run_trial(std::size_t suite, std::size_t dim, std::uint64_t seed, std::size_t trial) {
    // Each suite draws from its own stream so `--suite X` reproduces the X
    // rows of `--suite all`.
    const std::uint64_t base = derive_seed(seed, suite + 1);
    const auto t = random_hermitian_triple(SampleConfig{derive_seed(base, 1), dim, {}, 1.0});
    switch (suite) {
        case 0:
            return {audit_triple(t, trial_state(derive_seed(base, 2), dim, trial)).slack_sum, 1e-9};
        case 1:
            return {audit_triple(t, trial_state(derive_seed(base, 2), dim, trial)).slack_prod, 1e-9};
        case 2: {
            const auto r = build_r(t);
            const double residual = (r.matrix() * r.matrix() - r_squared_expansion(t).matrix()).frobenius_norm();
            const double norm = operator_norm(r);
            return {-residual / (1.0 + norm * norm), 1e-10};
        }
        default: {
            const auto r = build_r(t);
            const auto rho = trial_state(derive_seed(base, 2), 2 * dim, trial);
            const double first = expectation(r, rho);
            const double second = expectation(r.matrix() * r.matrix(), rho).real();
            return {second - first * first, 1e-9};
        }
    }
}

std::vector<std::size_t> selected_suites(const std::string &suite) {
    const auto &names = verify_suites();
    if (suite == "all") return {0, 1, 2, 3};
    const auto it = std::find(names.begin(), names.end(), suite);
    if (it == names.end()) throw InputError("--suite: unknown suite '" + suite + "'");
    return {static_cast<std::size_t>(it - names.begin())};
}

void validate(const VerifyOptions &opts) {
    if (opts.dim < 2) {
        throw InputError("--dim: must be at least 2 (commutators vanish identically for dim 1)");
    }
    if (opts.dim > kMaxVerifyDim) throw InputError("--dim: at most " + std::to_string(kMaxVerifyDim));
    if (opts.format != "json" && opts.format != "csv") throw InputError("--format: expected json or csv");
}

Json verify_replay(const VerifyOptions &o) {
    return Json::array({"verify", "--suite", o.suite, "--dim", std::to_string(o.dim), "--trials",
                        std::to_string(o.trials), "--seed", std::to_string(o.seed), "--format", o.format});
}

struct SuiteRow {
    std::size_t suite;
    std::size_t trial;
    std::uint64_t seed;
    TrialOutcome outcome;
};

std::vector<SuiteRow> run_campaign(const VerifyOptions &opts) {
    std::vector<SuiteRow> rows;
    for (std::size_t s : selected_suites(opts.suite)) {
        for (std::size_t i = 0; i < opts.trials; ++i) {
            const std::uint64_t seed = derive_seed(opts.seed, i);
            rows.push_back({s, i, seed, run_trial(s, opts.dim, seed, i)});
        }
    }
    return rows;
}

Json summarize(const VerifyOptions &opts, const std::vector<SuiteRow> &rows) {
    Json suites = Json::array();
    std::size_t trials = 0;
    std::size_t passes = 0;
    for (std::size_t s : selected_suites(opts.suite)) {
        std::size_t n = 0;
        std::size_t ok = 0;
        double tol = 0.0;
        const SuiteRow *worst = nullptr;
        for (const auto &r : rows) {
            if (r.suite != s) continue;
            ++n;
            ok += r.outcome.pass();
            tol = r.outcome.tolerance;
            if (!worst || r.outcome.slack < worst->outcome.slack) worst = &r;
        }
        trials += n;
        passes += ok;
        Json entry{{"name", verify_suites()[s]}, {"trials", n}, {"passes", ok}, {"failures", n - ok}};
        entry["tolerance"] = worst ? Json(tol) : Json(nullptr);
        entry["worst_slack"] = worst ? Json(worst->outcome.slack) : Json(nullptr);
        entry["worst_trial"] = worst ? Json(worst->trial) : Json(nullptr);
        suites.push_back(std::move(entry));
    }
    Json report = header("verify");
    report["config"] = Json{{"suite", opts.suite}, {"dim", opts.dim}, {"trials", opts.trials},
                            {"seed", opts.seed}, {"format", opts.format}};
    report["replay"] = verify_replay(opts);
    report["seed"] = opts.seed;
    report["counts"] = Json{{"trials", trials}, {"passes", passes}, {"failures", trials - passes}};
    report["suites"] = std::move(suites);
    return report;
}

// ---------------------------------------------------------------- example

double singlet_overlap(std::span<const Complex> v) {
    const double r = 1.0 / std::sqrt(2.0);
    return std::abs(r * (v[2] - v[1]));
}

Json check(const char *name, double value, double expected, double tolerance) {
    const double err = std::abs(value - expected);
    return Json{{"name", name},         {"value", value},          {"expected", expected},
                {"abs_error", err},     {"tolerance", tolerance},  {"pass", err <= tolerance}};
}

// ---------------------------------------------------------------- dispatch

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::ConvergenceFailure:
        case ErrorCode::InternalConsistency:
            return kExitFailures;
        default:
            return kExitInputError;
    }
}

struct Targets {
    std::optional<std::filesystem::path> out;
};

}  // namespace

std::uint64_t resolve_seed(std::optional<std::uint64_t> explicit_seed) {
    if (explicit_seed) return *explicit_seed;
    const char *env = std::getenv(kSeedEnvVar);
    if (!env || !*env) return 1;
    const std::string s(env);
    std::size_t used = 0;
    try {
        if (s.front() == '-') throw std::invalid_argument("negative");
        const auto v = std::stoull(s, &used, 10);
        if (used == s.size()) return v;
    } catch (const std::exception &) {
    }
    throw InputError(std::string(kSeedEnvVar) + ": expected an unsigned integer, got '" + s + "'");
}

const std::vector<std::string> &verify_suites() {
    static const std::vector<std::string> names{"sumform", "prodform", "rsq", "schwarz"};
    return names;
}

Json verify_report(const VerifyOptions &opts) {
    validate(opts);
    const auto t0 = Clock::now();
    Json report = summarize(opts, run_campaign(opts));
    report["wall_time_s"] = seconds_since(t0);
    return report;
}

CommandOutput run_verify(const VerifyOptions &opts) {
    validate(opts);
    if (opts.format == "json") {
        Json report = verify_report(opts);
        const bool clean = report["counts"]["failures"].get<std::size_t>() == 0;
        return {clean ? kExitOk : kExitFailures, dump(report)};
    }
    const auto rows = run_campaign(opts);
    std::string csv = "suite,trial,seed,slack,tolerance,pass\n";
    bool clean = true;
    for (const auto &r : rows) {
        clean = clean && r.outcome.pass();
        csv += verify_suites()[r.suite] + "," + std::to_string(r.trial) + "," + std::to_string(r.seed) + "," +
               fmt17(r.outcome.slack) + "," + fmt17(r.outcome.tolerance) + "," +
               (r.outcome.pass() ? "1" : "0") + "\n";
    }
    return {clean ? kExitOk : kExitFailures, csv};
}

CommandOutput run_witness(const WitnessOptions &opts) {
    const auto t0 = Clock::now();
    const auto t = load_triple(opts.triple);
    const auto rho = load_state(opts.state);
    WitnessReport rep;
    std::optional<FloorEstimate> floor;
    if (opts.method == "expectation") {
        rep = expectation_witness(t, rho);
    } else if (opts.method == "variance") {
        if (!opts.floor) throw InputError("--floor: required for --method variance");
        floor = load_floor(*opts.floor);
        rep = variance_witness(t, rho, *floor);
    } else {
        throw InputError("--method: expected expectation or variance");
    }

    Json doc = header("witness");
    Json cfg{{"triple", opts.triple.string()}, {"state", opts.state.string()}, {"method", opts.method}};
    Json replay = Json::array({"witness", "--triple", opts.triple.string(), "--state", opts.state.string(),
                               "--method", opts.method});
    if (opts.floor) {
        cfg["floor"] = opts.floor->string();
        replay.push_back("--floor");
        replay.push_back(opts.floor->string());
    }
    doc["config"] = std::move(cfg);
    doc["replay"] = std::move(replay);
    doc["dim"] = t.dim();
    doc["verdict"] = std::string(to_string(rep.verdict));
    doc["method"] = std::string(to_string(rep.method));
    doc["expectation_abs"] = rep.expectation_abs;
    doc["second_moment"] = rep.second_moment;
    doc["variance"] = rep.variance;
    doc["threshold_used"] = rep.threshold_used;
    doc["involutive"] = rep.involutive;
    doc["wall_time_s"] = seconds_since(t0);
    return {rep.verdict == Verdict::Entangled ? kExitEntangled : kExitOk, dump(doc)};
}

Json floor_report(const FloorOptions &opts) {
    const auto t0 = Clock::now();
    const auto t = load_triple(opts.triple);
    const auto est = estimate_variance_floor(t, opts.config);
    const auto &c = opts.config;
    Json doc = floor_to_json(est);
    Json out = header("floor");
    out["config"] = Json{{"triple", opts.triple.string()}, {"restarts", c.restarts},
                         {"seed", c.seed},                 {"max_iterations", c.max_iterations},
                         {"tolerance", c.tolerance},       {"grid_check", c.grid_check},
                         {"grid_step", c.grid_step}};
    Json replay = Json::array({"floor", "--triple", opts.triple.string(), "--restarts", std::to_string(c.restarts),
                               "--seed", std::to_string(c.seed), "--max-iterations",
                               std::to_string(c.max_iterations), "--tolerance", fmt17(c.tolerance)});
    if (c.grid_check) {
        replay.push_back("--grid-check");
        replay.push_back("--grid-step");
        replay.push_back(fmt17(c.grid_step));
    }
    out["replay"] = std::move(replay);
    out["dim"] = t.dim();
    out.update(doc);
    out["wall_time_s"] = seconds_since(t0);
    return out;
}

CommandOutput run_floor(const FloorOptions &opts) { return {kExitOk, dump(floor_report(opts))}; }

Json example_report() {
    const auto t0 = Clock::now();
    const auto t = ObservableTriple::paulis();
    const auto r = build_r(t);
    const auto eig = eig_hermitian(Observable(r.matrix() * r.matrix()));
    const std::size_t top = eig.values.size() - 1;
    const auto v = eig.vector(top);
    const double rt = 1.0 / std::sqrt(2.0);
    const auto singlet = QuantumState::pure({0.0, rt, -rt, 0.0});
    const auto singlet_rep = expectation_witness(t, singlet);

    Json saturation = Json::array();
    double worst = 0.0;
    for (const auto &p : SignPattern::all()) {
        const auto a = audit_triple(t, appendix_state(p));
        worst = std::max({worst, std::abs(a.slack_sum), std::abs(a.slack_prod)});
        saturation.push_back(Json{{"case", p.case_number()}, {"signs", p.label()},
                                  {"lhs_sum", a.lhs_sum},   {"rhs_sum", a.rhs_sum},
                                  {"lhs_prod", a.lhs_prod}, {"rhs_prod", a.rhs_prod},
                                  {"slack_sum", a.slack_sum}, {"slack_prod", a.slack_prod}});
    }

    constexpr double tol = 1e-9;
    const auto threshold = static_cast<double>(std::sqrt(3.0L + 2.0L * std::sqrt(3.0L)));
    Json checks = Json::array({
        check("max_eigenvalue_r_squared", eig.values[top], 9.0, tol),
        check("singlet_overlap", singlet_overlap(v), 1.0, tol),
        check("singlet_expectation_abs", singlet_rep.expectation_abs, 3.0, tol),
        check("separable_threshold", separable_expectation_bound(), threshold, tol),
        check("saturation_worst_slack", worst, 0.0, tol),
    });

    Json eigenvector = Json::array();
    for (const auto &z : v) eigenvector.push_back(Json::array({z.real(), z.imag()}));

    Json verdicts = Json::object();
    verdicts["singlet"] = std::string(to_string(singlet_rep.verdict));
    verdicts["product_00"] = std::string(to_string(expectation_witness(t, QuantumState::basis(4, 0)).verdict));
    verdicts["maximally_mixed"] =
        std::string(to_string(expectation_witness(t, QuantumState::maximally_mixed(4)).verdict));

    std::size_t passes = 0;
    for (const auto &c : checks) passes += c["pass"].get<bool>();

    Json report = header("example");
    report["config"] = Json::object();
    report["replay"] = Json::array({"example"});
    report["seed"] = nullptr;
    report["counts"] = Json{{"trials", checks.size()}, {"passes", passes}, {"failures", checks.size() - passes}};
    report["checks"] = std::move(checks);
    report["top_eigenvector"] = std::move(eigenvector);
    report["verdicts"] = std::move(verdicts);
    report["saturation"] = std::move(saturation);
    report["wall_time_s"] = seconds_since(t0);
    return report;
}

CommandOutput run_example() {
    const Json report = example_report();
    const bool clean = report["counts"]["failures"].get<std::size_t>() == 0;
    return {clean ? kExitOk : kExitFailures, dump(report)};
}

Json without_timing(Json report) {
    report.erase("wall_time_s");
    return report;
}

int run_cli(const std::vector<std::string> &args) {
    CLI::App app{"Triple-observable uncertainty relations and entanglement witnesses", "tripleunc"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::optional<std::filesystem::path> out;
    std::uint64_t seed_value = 0;

    VerifyOptions vopt;
    auto *verify = app.add_subcommand("verify", "Fuzz the uncertainty identities and inequalities");
    verify->add_option("--dim", vopt.dim, "Dimension d of the observables (2..32)")->capture_default_str();
    verify->add_option("--trials", vopt.trials, "Trials per suite")->capture_default_str();
    auto *vseed = verify->add_option("--seed", seed_value, "Campaign seed (default $TRIPLEUNC_SEED or 1)");
    verify->add_option("--suite", vopt.suite, "Suite to run")
        ->check(CLI::IsMember({"sumform", "prodform", "rsq", "schwarz", "all"}))
        ->capture_default_str();
    verify->add_option("--format", vopt.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    verify->add_option("--out", out, "Report path (default stdout)");

    WitnessOptions wopt;
    auto *witness = app.add_subcommand("witness", "Classify a state as Entangled or Inconclusive");
    witness->add_option("--triple", wopt.triple, "Observable triple document")->required();
    witness->add_option("--state", wopt.state, "State document on dimension 2d")->required();
    witness->add_option("--method", wopt.method, "Witness method")
        ->check(CLI::IsMember({"expectation", "variance"}))
        ->capture_default_str();
    witness->add_option("--floor", wopt.floor, "Floor document (required for --method variance)");
    witness->add_option("--out", out, "Report path (default stdout)");

    FloorOptions fopt;
    auto *floor = app.add_subcommand("floor", "Estimate the product-state variance floor c");
    floor->add_option("--triple", fopt.triple, "Observable triple document")->required();
    floor->add_option("--restarts", fopt.config.restarts, "Multi-start count")->capture_default_str();
    auto *fseed = floor->add_option("--seed", seed_value, "Restart seed (default $TRIPLEUNC_SEED or 1)");
    floor->add_option("--max-iterations", fopt.config.max_iterations, "Local search iteration cap")
        ->capture_default_str();
    floor->add_option("--tolerance", fopt.config.tolerance, "Local search objective tolerance")
        ->capture_default_str();
    floor->add_flag("--grid-check", fopt.config.grid_check, "Cross-check on a Bloch-sphere grid (d = 2)");
    floor->add_option("--grid-step", fopt.config.grid_step, "Grid step in radians")->capture_default_str();
    floor->add_option("--out", out, "Floor document path (default stdout)");

    auto *example = app.add_subcommand("example", "Reproduce the Pauli-triple example");
    example->add_option("--out", out, "Report path (default stdout)");

    std::filesystem::path replay_path;
    auto *replay = app.add_subcommand("replay", "Re-run the command echoed in a report");
    replay->add_option("report", replay_path, "Report written by an earlier run")->required();
    replay->add_option("--out", out, "Report path (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        CommandOutput result{kExitOk, {}};
        if (*verify) {
            vopt.seed = resolve_seed(vseed->count() ? std::optional(seed_value) : std::nullopt);
            result = run_verify(vopt);
        } else if (*witness) {
            result = run_witness(wopt);
        } else if (*floor) {
            fopt.config.seed = resolve_seed(fseed->count() ? std::optional(seed_value) : std::nullopt);
            fopt.config.validate();
            result = run_floor(fopt);
        } else if (*example) {
            result = run_example();
        } else {
            const Json report = read_document(replay_path);
            const auto it = report.find("replay");
            if (it == report.end() || !it->is_array() || it->empty() ||
                !std::all_of(it->begin(), it->end(), [](const Json &a) { return a.is_string(); })) {
                throw InputError(replay_path.string() + ": replay: expected an array of strings");
            }
            std::vector<std::string> again;
            for (const auto &a : *it) again.push_back(a.get<std::string>());
            if (again.front() == "replay") throw InputError(replay_path.string() + ": replay: refusing to recurse");
            if (out) {
                again.push_back("--out");
                again.push_back(out->string());
            }
            return run_cli(again);
        }
        emit(result.text, out);
        if (out && *witness) {
            const Json doc = Json::parse(result.text);
            std::cout << "verdict: " << doc["verdict"].get<std::string>()
                      << "  |Tr rho R| = " << fmt17(doc["expectation_abs"].get<double>())
                      << "  Tr rho R^2 = " << fmt17(doc["second_moment"].get<double>())
                      << "  variance = " << fmt17(doc["variance"].get<double>()) << "\n";
        }
        return result.exit_code;
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailures;
    }
}

}  // namespace tripleunc::cli
