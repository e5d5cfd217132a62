#include "levyexit/harness.hpp"

#include "levyexit/error.hpp"
#include "levyexit/reference.hpp"

#include <algorithm>
#include <cmath>

namespace levyexit {

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw Error(ErrorCode::LengthMismatch, "slope fit needs two or more matching points");
    }
    const auto n = static_cast<double>(x.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
            throw Error(ErrorCode::DomainError, "slope fit needs positive data");
        }
        mx += std::log10(x[i]);
        my += std::log10(y[i]);
    }
    mx /= n;
    my /= n;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = std::log10(x[i]) - mx;
        sxy += dx * (std::log10(y[i]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

bool resolve_one_sided(const ExperimentConfig& cfg, const ProblemSpec& problem) {
    switch (cfg.one_sided) {
    case OneSided::On: return true;
    case OneSided::Off: return false;
    case OneSided::Auto: return recommend_one_sided(problem);
    }
    return false;
}

double value_at(const SolutionProfile& profile, double x) {
    return profile.values[node_index(profile.grid, x)];
}

namespace {

SolutionProfile solve_cell(const ExperimentConfig& cfg, const ProblemSpec& problem, int resolution,
                           Scheme scheme, Execution exec) {
    const Grid grid = build_grid(problem.domain, cells_for_resolution(problem.domain, resolution));
    return solve_on_grid(problem, grid, scheme, cfg.solver, resolve_one_sided(cfg, problem), exec);
}

void check_ladder(const std::vector<int>& resolutions) {
    if (resolutions.empty()) {
        throw Error(ErrorCode::ConfigError, "no resolutions given");
    }
    for (std::size_t i = 1; i < resolutions.size(); ++i) {
        if (resolutions[i] <= resolutions[i - 1]) {
            throw Error(ErrorCode::ConfigError, "resolutions must be strictly increasing");
        }
    }
}

double operator_oracle(const ProblemSpec& p, double x) {
    // generator applied to 1 - x^2: the jump part scales with eps, the local
    // part is exact on quadratics
    return p.eps * lhs_closed_form(p.alpha, x) - p.d - 2.0 * x * drift_eval(p.drift, x);
}

double operator_error(const ExperimentConfig& cfg, const ProblemSpec& p, int resolution,
                      Execution exec) {
    const Grid grid = build_grid(p.domain, cells_for_resolution(p.domain, resolution));
    std::vector<double> u(grid.nodes.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        u[i] = 1.0 - grid.nodes[i] * grid.nodes[i];
    }
    const auto lhs = operator_apply(p, grid, u, cfg.scheme, false, exec);
    if (cfg.error_norm == ErrorNorm::Point) {
        const std::size_t j = node_index(grid, cfg.probe);
        if (j == 0 || j == grid.n_cells) {
            throw Error(ErrorCode::NonNodeProbe, "probe must be an interior node");
        }
        return std::abs(lhs[j - 1] - operator_oracle(p, cfg.probe));
    }
    double worst = 0.0;
    for (std::size_t j = 1; j < grid.n_cells; ++j) {
        worst = std::max(worst, std::abs(lhs[j - 1] - operator_oracle(p, grid.nodes[j])));
    }
    return worst;
}

double exit_time_error(const ExperimentConfig& cfg, const ProblemSpec& p, int resolution,
                       Scheme scheme, Execution exec) {
    const SolutionProfile prof = solve_cell(cfg, p, resolution, scheme, exec);
    const double b = p.domain.b;
    auto exact = [&](double x) { return getoor_exit_time(p.alpha, b, x) / p.eps; };
    if (cfg.error_norm == ErrorNorm::Point) {
        return std::abs(value_at(prof, cfg.probe) - exact(cfg.probe));
    }
    double worst = 0.0;
    for (std::size_t j = 0; j <= prof.grid.n_cells; ++j) {
        worst = std::max(worst, std::abs(prof.values[j] - exact(prof.grid.nodes[j])));
    }
    return worst;
}

} // namespace

ConvergenceReport run_convergence(const ExperimentConfig& cfg, Execution exec) {
    check_ladder(cfg.resolutions);
    ProblemSpec p = first_problem(cfg);
    p.kind = ProblemKind::ExitTime;
    validate(p);

    ConvergenceReport report;
    report.alpha = p.alpha;
    report.probe_point = cfg.probe;
    report.study = to_string(cfg.study);
    if (cfg.study == StudyKind::Operator) {
        if (p.domain.a != -1.0 || p.domain.b != 1.0 || !p.has_jumps()) {
            throw Error(ErrorCode::ConfigError, "operator study needs domain (-1, 1) and eps > 0");
        }
        report.reference = "closed-form generator of 1 - x^2";
    } else {
        if (p.d != 0.0 || !drift_is_zero(p.drift) || p.domain.a != -p.domain.b || !p.has_jumps()) {
            throw Error(ErrorCode::ConfigError,
                        "exit-time studies need d = 0, zero drift, eps > 0 and a symmetric domain");
        }
        report.reference = "exact symmetric stable exit time";
    }
    report.abscissa.assign(cfg.resolutions.size(), 0.0);
    report.errors.assign(cfg.resolutions.size(), 0.0);
    for (std::size_t i = 0; i < cfg.resolutions.size(); ++i) {
        const int res = cfg.resolutions[i];
        report.abscissa[i] = res;
        switch (cfg.study) {
        case StudyKind::Operator: report.errors[i] = operator_error(cfg, p, res, exec); break;
        case StudyKind::PunchedHole:
            report.errors[i] = exit_time_error(cfg, p, res, Scheme::PunchedHole, exec);
            break;
        case StudyKind::Corrected:
            report.errors[i] = exit_time_error(cfg, p, res, cfg.scheme == Scheme::PunchedHole
                                                                ? Scheme::Corrected
                                                                : cfg.scheme,
                                               exec);
            break;
        }
    }
    report.fitted_slope = report.errors.size() >= 2 ? fit_slope(report.abscissa, report.errors) : 0.0;
    return report;
}

ConvergenceReport run_eps_scaling(const ExperimentConfig& cfg, Execution exec) {
    ProblemSpec base = first_problem(cfg);
    if (!(base.d > 0.0)) {
        throw Error(ErrorCode::InvalidDiffusion, "eps scaling needs d > 0");
    }
    base.kind = ProblemKind::ExitTime;
    ConvergenceReport report;
    report.abscissa_name = "eps";
    report.alpha = base.alpha;
    report.probe_point = cfg.probe;
    report.study = "eps_scaling";
    report.reference = "u0 + eps u1";

    const AsymptoticSolution expansion(base, 1);
    const double u0 = expansion.u0(cfg.probe);
    const double u1 = expansion.u1(cfg.probe);
    for (double eps : cfg.eps) {
        ProblemSpec p = make_problem(cfg, cfg.alpha.front(), eps, cfg.d.front(), cfg.a.front(),
                                     cfg.b.front());
        p.kind = ProblemKind::ExitTime;
        const SolutionProfile prof = solve_cell(cfg, p, cfg.resolutions.front(), cfg.scheme, exec);
        report.abscissa.push_back(eps);
        report.errors.push_back(std::abs(value_at(prof, cfg.probe) - (u0 + eps * u1)));
    }
    bool positive = report.abscissa.size() >= 2;
    for (std::size_t i = 0; i < report.abscissa.size(); ++i) {
        positive = positive && report.abscissa[i] > 0.0 && report.errors[i] > 0.0;
    }
    report.fitted_slope = positive ? fit_slope(report.abscissa, report.errors) : 0.0;
    return report;
}

SolutionProfile run_profile(const ExperimentConfig& cfg, Execution exec) {
    return solve_cell(cfg, first_problem(cfg), cfg.resolutions.front(), cfg.scheme, exec);
}

std::vector<SweepCell> run_sweep(const ExperimentConfig& cfg, Execution exec) {
    if (cfg.alpha.empty() || cfg.eps.empty() || cfg.d.empty() || cfg.a.empty() || cfg.b.empty() ||
        cfg.resolutions.empty()) {
        throw Error(ErrorCode::ConfigError, "sweep axes must be non-empty");
    }
    const std::vector<double> a_axis = cfg.symmetric ? std::vector<double>{0.0} : cfg.a;
    std::vector<SweepCell> cells;
    for (double alpha : cfg.alpha) {
        for (double eps : cfg.eps) {
            for (double d : cfg.d) {
                for (double a : a_axis) {
                    for (double b : cfg.b) {
                        for (int res : cfg.resolutions) {
                            SweepCell cell;
                            cell.problem = make_problem(cfg, alpha, eps, d, a, b);
                            cell.resolution = res;
                            cells.push_back(std::move(cell));
                        }
                    }
                }
            }
        }
    }

    const bool parallel = exec == Execution::Parallel && cells.size() > 1;
    const auto n = static_cast<long>(cells.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (long i = 0; i < n; ++i) {
        SweepCell& cell = cells[static_cast<std::size_t>(i)];
        try {
            cell.profile = solve_cell(cfg, cell.problem, cell.resolution, cfg.scheme,
                                      parallel ? Execution::Serial : exec);
        } catch (const Error& e) {
            cell.error = std::string(to_string(e.code())) + ": " + e.what();
        }
    }
    return cells;
}

double BoundaryDiagnostic::jump() const {
    return std::max(std::abs(left_limit - left_value), std::abs(right_limit - right_value));
}

BoundaryDiagnostic boundary_diagnostic(const SolutionProfile& profile) {
    const auto& u = profile.values;
    const std::size_t n = profile.grid.n_cells;
    BoundaryDiagnostic diag;
    diag.left_value = u[0];
    diag.right_value = u[n];
    diag.left_limit = 3.0 * u[1] - 3.0 * u[2] + u[3];
    diag.right_limit = 3.0 * u[n - 1] - 3.0 * u[n - 2] + u[n - 3];
    return diag;
}

} // namespace levyexit
