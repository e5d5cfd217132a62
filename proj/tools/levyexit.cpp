#include "levyexit/config.hpp"
#include "levyexit/csv.hpp"
#include "levyexit/error.hpp"
#include "levyexit/harness.hpp"
#include "levyexit/monte_carlo.hpp"
#include "levyexit/reference.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

using namespace levyexit;

namespace {

struct GlobalFlags {
    std::string config;
    std::string out;
    std::string scheme;
    std::string solver;
    std::string one_sided;
    std::string seed;
    std::vector<std::string> settings;
};

ExperimentConfig build_config(const GlobalFlags& flags) {
    ExperimentConfig cfg = flags.config.empty() ? ExperimentConfig{} : load_config(flags.config);
    for (const auto& s : flags.settings) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) {
            throw Error(ErrorCode::ConfigError, "--set expects key=value, got '" + s + "'");
        }
        apply_setting(cfg, s.substr(0, eq), s.substr(eq + 1));
    }
    if (!flags.scheme.empty()) {
        apply_setting(cfg, "scheme", flags.scheme);
    }
    if (!flags.solver.empty()) {
        apply_setting(cfg, "solver", flags.solver);
    }
    if (!flags.one_sided.empty()) {
        apply_setting(cfg, "one_sided", flags.one_sided);
    }
    if (!flags.seed.empty()) {
        apply_setting(cfg, "seed", flags.seed);
    }
    if (!flags.out.empty()) {
        cfg.output = flags.out;
    }
    validate(cfg.solver);
    return cfg;
}

void emit(const std::string& csv, const ExperimentConfig& cfg) {
    if (cfg.output.empty() || cfg.output == "-") {
        std::cout << csv;
    } else {
        write_text(csv, cfg.output);
    }
}

void print_slopes(const std::vector<ConvergenceReport>& reports) {
    for (const auto& r : reports) {
        std::fprintf(stderr, "alpha=%g slope=%.4f\n", r.alpha, r.fitted_slope);
    }
}

std::vector<ConvergenceReport> per_alpha(ExperimentConfig cfg, bool eps_study) {
    std::vector<ConvergenceReport> reports;
    const auto alphas = cfg.alpha;
    for (double alpha : alphas) {
        cfg.alpha = {alpha};
        reports.push_back(eps_study ? run_eps_scaling(cfg) : run_convergence(cfg));
    }
    return reports;
}

int run_profile_command(ExperimentConfig cfg, ProblemKind kind) {
    // escape-prob keeps an explicit escape_left from the config
    if (kind == ProblemKind::ExitTime || cfg.kind != ProblemKind::EscapeLeft) {
        cfg.kind = kind;
    }
    const bool single = cfg.alpha.size() == 1 && cfg.eps.size() == 1 && cfg.d.size() == 1 &&
                        cfg.a.size() == 1 && cfg.b.size() == 1 && cfg.resolutions.size() == 1;
    if (single) {
        emit(format_csv(run_profile(cfg)), cfg);
    } else {
        emit(format_csv(run_sweep(cfg)), cfg);
    }
    return 0;
}

int run_mc_check(const ExperimentConfig& cfg) {
    ProblemSpec p = first_problem(cfg);
    p.kind = ProblemKind::ExitTime;
    MCOptions opts;
    opts.max_steps = cfg.max_steps;
    const MCEstimate est = mc_exit_time(p, cfg.x0, cfg.dt, cfg.n_paths, cfg.seed, opts);
    std::printf("mean=%.6f std_error=%.6f n_paths=%ld dt=%g seed=%llu truncated=%g\n", est.mean,
                est.std_error, est.n_paths, est.dt, static_cast<unsigned long long>(est.seed),
                est.truncated_fraction);
    const bool exact_available = p.d == 0.0 && drift_is_zero(p.drift) && p.has_jumps() &&
                                 p.domain.a == -p.domain.b;
    if (exact_available) {
        const double exact = getoor_exit_time(p.alpha, p.domain.b, cfg.x0) / p.eps;
        const double allowance = 3.0 * est.std_error + 0.05;
        std::printf("exact=%.6f deviation=%.6f allowance=%.6f %s\n", exact, est.mean - exact,
                    allowance, std::abs(est.mean - exact) <= allowance ? "agree" : "disagree");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mean exit times and escape probabilities under Levy noise"};
    app.require_subcommand(1);
    GlobalFlags flags;
    app.add_option("--config", flags.config, "key = value configuration file");
    app.add_option("--out", flags.out, "output CSV path (default stdout)");
    app.add_option("--scheme", flags.scheme, "punched_hole | corrected | principal_value");
    app.add_option("--solver", flags.solver, "lu | gmres");
    app.add_option("--one-sided", flags.one_sided, "auto | on | off");
    app.add_option("--seed", flags.seed, "Monte Carlo seed");
    app.add_option("--set", flags.settings, "override a config key (key=value), repeatable");

    auto* verify = app.add_subcommand("verify-lhs", "discrete generator on 1 - x^2 vs closed form");
    auto* exit_time = app.add_subcommand("exit-time", "mean exit time profile (or sweep)");
    auto* escape = app.add_subcommand("escape-prob", "escape probability profile (or sweep)");
    auto* convergence = app.add_subcommand("convergence", "error vs resolution with fitted slope");
    auto* eps_scaling = app.add_subcommand("eps-scaling", "error of u0 + eps u1 vs eps");
    auto* sweep = app.add_subcommand("sweep", "Cartesian parameter sweep");
    auto* mc = app.add_subcommand("mc-check", "Monte Carlo exit time estimate");
    for (auto* sub : {verify, exit_time, escape, convergence, eps_scaling, sweep, mc}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        ExperimentConfig cfg = build_config(flags);
        if (*verify) {
            cfg.study = StudyKind::Operator;
            const auto reports = per_alpha(cfg, false);
            print_slopes(reports);
            emit(format_csv(reports), cfg);
        } else if (*exit_time) {
            return run_profile_command(cfg, ProblemKind::ExitTime);
        } else if (*escape) {
            return run_profile_command(cfg, ProblemKind::EscapeRight);
        } else if (*convergence) {
            const auto reports = per_alpha(cfg, false);
            print_slopes(reports);
            emit(format_csv(reports), cfg);
        } else if (*eps_scaling) {
            const auto reports = per_alpha(cfg, true);
            print_slopes(reports);
            emit(format_csv(reports), cfg);
        } else if (*sweep) {
            emit(format_csv(run_sweep(cfg)), cfg);
        } else if (*mc) {
            return run_mc_check(cfg);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: Internal: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
