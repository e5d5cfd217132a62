#include "levyexit/harness.hpp"
#include "levyexit/monte_carlo.hpp"
#include "levyexit/reference.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

using namespace levyexit;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        pass = pass && ok;
        if (!detail.empty()) {
            detail += "; ";
        }
        detail += what + (ok ? "" : " [FAILED]");
    }
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

ExperimentConfig pure_jump(double alpha, int resolution) {
    ExperimentConfig cfg;
    cfg.alpha = {alpha};
    cfg.eps = {1.0};
    cfg.d = {0.0};
    cfg.resolutions = {resolution};
    return cfg;
}

double sup_error(const SolutionProfile& p, const std::function<double(double)>& exact) {
    double worst = 0.0;
    for (std::size_t j = 0; j < p.values.size(); ++j) {
        worst = std::max(worst, std::abs(p.values[j] - exact(p.grid.nodes[j])));
    }
    return worst;
}

const std::vector<int> kLadder{10, 20, 40, 80, 160, 320};

Outcome operator_consistency() {
    Outcome out;
    const auto t0 = Clock::now();
    for (double alpha : {0.5, 1.0, 1.5}) {
        ExperimentConfig cfg = pure_jump(alpha, 10);
        cfg.resolutions = kLadder;
        cfg.study = StudyKind::Operator;
        cfg.scheme = Scheme::PrincipalValue;
        cfg.probe = -0.5;
        const ConvergenceReport r = run_convergence(cfg);
        out.require(std::abs(r.fitted_slope + 2.0) <= 0.25,
                    "alpha=" + fmt("%g", alpha) + " slope " + fmt("%.3f", r.fitted_slope));
        if (alpha == 1.0) {
            const double exact = -(4.0 - std::log(3.0)) / std::numbers::pi;
            const double lhs = lhs_closed_form(1.0, -0.5);
            out.require(std::abs(lhs - exact) < 1e-14, "closed form at -0.5");
            out.require(r.errors.back() < 1e-4, "J=320 error " + fmt("%.2e", r.errors.back()));
        }
    }
    const double t = seconds_since(t0);
    out.require(t < 30.0, "runtime " + fmt("%.1f s", t));
    return out;
}

Outcome getoor_reproduction() {
    Outcome out;
    for (double alpha : {0.5, 1.0, 1.5}) {
        ExperimentConfig cfg = pure_jump(alpha, 80);
        cfg.scheme = Scheme::PrincipalValue;
        const SolutionProfile prof = run_profile(cfg);
        const double sup = sup_error(prof, [&](double x) { return getoor_exit_time(alpha, 1.0, x); });
        out.require(sup < 1e-2, "alpha=" + fmt("%g", alpha) + " sup " + fmt("%.2e", sup));
        if (alpha == 1.0) {
            const double u0 = value_at(prof, 0.0);
            out.require(std::abs(u0 - 1.0) < 5e-3, "u(0) " + fmt("%.5f", u0));
        }
    }
    return out;
}

Outcome scheme_correction() {
    Outcome out;
    double corrected_at_320 = 0.0;
    double punched_at_320 = 0.0;
    for (double alpha : {0.5, 1.0, 1.5}) {
        ExperimentConfig cfg = pure_jump(alpha, 10);
        cfg.resolutions = kLadder;
        cfg.probe = -0.5;
        cfg.study = StudyKind::Corrected;
        cfg.scheme = Scheme::Corrected;
        const ConvergenceReport r = run_convergence(cfg);
        out.require(std::abs(r.fitted_slope + 1.0) <= 0.25,
                    "alpha=" + fmt("%g", alpha) + " corrected slope " + fmt("%.3f", r.fitted_slope));
        if (alpha == 1.5) {
            corrected_at_320 = r.errors.back();
            cfg.study = StudyKind::PunchedHole;
            punched_at_320 = run_convergence(cfg).errors.back();
        }
    }
    out.require(corrected_at_320 <= punched_at_320 / 10.0,
                "alpha=1.5 J=320 corrected " + fmt("%.2e", corrected_at_320) + " vs punched " +
                    fmt("%.2e", punched_at_320));
    return out;
}

Outcome desingularization_equivalence() {
    Outcome out;
    double worst = 0.0;
    for (double alpha : {0.5, 1.0, 1.5}) {
        ExperimentConfig cfg = pure_jump(alpha, 80);
        cfg.scheme = Scheme::Corrected;
        const SolutionProfile c = run_profile(cfg);
        cfg.scheme = Scheme::PrincipalValue;
        const SolutionProfile v = run_profile(cfg);
        double norm = 0.0;
        double diff = 0.0;
        for (std::size_t j = 0; j < c.values.size(); ++j) {
            norm = std::max(norm, std::abs(c.values[j]));
            diff = std::max(diff, std::abs(c.values[j] - v.values[j]));
        }
        worst = std::max(worst, diff / (1.0 + norm));
    }
    out.require(worst < 1e-10, "max scaled difference " + fmt("%.2e", worst));
    return out;
}

Outcome asymptotic_order() {
    Outcome out;
    ExperimentConfig cfg;
    cfg.alpha = {1.5};
    cfg.d = {1.0};
    cfg.eps = {0.1, 0.05, 0.025, 0.0125};
    cfg.resolutions = {200};
    cfg.probe = 0.0;
    const ConvergenceReport r = run_eps_scaling(cfg);
    out.require(std::abs(r.fitted_slope - 2.0) <= 0.3, "eps slope " + fmt("%.3f", r.fitted_slope));
    double worst = 0.0;
    for (double alpha : {0.5, 1.0, 1.5}) {
        ProblemSpec p;
        p.alpha = alpha;
        p.eps = 0.1;
        p.d = 1.0;
        p.domain = {-1.0, 1.0};
        const AsymptoticSolution s = asymptotic_exit_time(p, 1);
        for (int i = 0; i <= 20; ++i) {
            const double x = -1.0 + 0.1 * i;
            worst = std::max(worst, std::abs(s.u1(x) - asymptotic_u1_closed_form(alpha, x)));
        }
    }
    out.require(worst < 1e-6, "u1 max deviation at 21 nodes " + fmt("%.2e", worst));
    return out;
}

Outcome escape_probability() {
    Outcome out;
    double symmetry = 0.0;
    for (double alpha : {0.5, 1.0, 1.5}) {
        ExperimentConfig cfg = pure_jump(alpha, 160);
        cfg.kind = ProblemKind::EscapeRight;
        const SolutionProfile prof = run_profile(cfg);
        const double sup = sup_error(prof, [&](double x) { return escape_prob_closed_form(alpha, 1.0, x); });
        out.require(sup < 2e-2, "alpha=" + fmt("%g", alpha) + " sup " + fmt("%.2e", sup));
        const std::size_t n = prof.grid.n_cells;
        for (std::size_t j = 0; j <= n; ++j) {
            symmetry = std::max(symmetry, std::abs(prof.values[j] + prof.values[n - j] - 1.0));
            const double x = prof.grid.nodes[j];
            symmetry = std::max(symmetry, std::abs(escape_prob_closed_form(alpha, 1.0, x) +
                                                   escape_prob_closed_form(alpha, 1.0, -x) - 1.0));
        }
    }
    out.require(symmetry < 1e-10, "P(x)+P(-x)-1 " + fmt("%.1e", symmetry));
    ExperimentConfig brownian = pure_jump(2.0, 160);
    brownian.kind = ProblemKind::EscapeRight;
    const SolutionProfile line = run_profile(brownian);
    const double dev = sup_error(line, [](double x) { return (x + 1.0) / 2.0; });
    out.require(dev < 1e-12, "alpha=2 straight line " + fmt("%.1e", dev));
    return out;
}

Outcome qualitative_orderings() {
    Outcome out;
    std::vector<double> u_small;
    for (double alpha : {0.5, 1.0, 1.5, 2.0}) {
        u_small.push_back(value_at(run_profile(pure_jump(alpha, 80)), 0.0));
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < u_small.size(); ++i) {
        decreasing = decreasing && u_small[i] < u_small[i - 1];
    }
    out.require(decreasing, "b=1 u(0) decreasing in alpha");

    ExperimentConfig wide = pure_jump(0.5, 20);
    wide.a = {-4.0};
    wide.b = {4.0};
    const double u05 = value_at(run_profile(wide), 0.0);
    wide.alpha = {1.5};
    const double u15 = value_at(run_profile(wide), 0.0);
    out.require(u05 < u15, "b=4 u(0): alpha 0.5 " + fmt("%.3f", u05) + " < alpha 1.5 " + fmt("%.3f", u15));

    ExperimentConfig noise = pure_jump(0.5, 80);
    noise.drift = drift::Linear{-1.0};
    noise.d = {0.0, 0.1, 0.5, 1.0};
    const auto cells = run_sweep(noise);
    bool by_d = true;
    for (std::size_t i = 1; i < cells.size(); ++i) {
        by_d = by_d && cells[i].profile && cells[i - 1].profile &&
               value_at(*cells[i].profile, 0.0) < value_at(*cells[i - 1].profile, 0.0);
    }
    out.require(by_d, "O-U u(0) decreasing in d");
    return out;
}

Outcome discontinuity_detection() {
    Outcome out;
    ExperimentConfig cfg = pure_jump(0.5, 160);
    cfg.drift = drift::Linear{-1.0};
    cfg.one_sided = OneSided::On;
    const SolutionProfile prof = run_profile(cfg);
    const BoundaryDiagnostic diag = boundary_diagnostic(prof);
    out.require(diag.jump() > 0.05 && diag.left_value == 0.0 && diag.right_value == 0.0,
                "alpha=0.5 one-sided limit " + fmt("%.3f", diag.jump()) + " with zero boundary values");

    cfg.alpha = {1.5};
    std::vector<double> jumps;
    for (int res : {40, 80, 160, 320}) {
        cfg.resolutions = {res};
        jumps.push_back(boundary_diagnostic(run_profile(cfg)).jump());
    }
    bool shrinking = true;
    for (std::size_t i = 1; i < jumps.size(); ++i) {
        shrinking = shrinking && jumps[i] < jumps[i - 1];
    }
    shrinking = shrinking && jumps.back() < 0.5 * jumps.front();
    out.require(shrinking, "alpha=1.5 limit " + fmt("%.4f", jumps.front()) + " -> " + fmt("%.4f", jumps.back()));
    return out;
}

Outcome monte_carlo() {
    Outcome out;
    ProblemSpec p;
    p.alpha = 1.0;
    p.eps = 1.0;
    p.d = 0.0;
    p.domain = {-1.0, 1.0};
    const auto t0 = Clock::now();
    const MCEstimate e = mc_exit_time(p, 0.0, 1e-4, 100000, 20240601);
    const double t = seconds_since(t0);
    const double allowance = 3.0 * e.std_error + 0.05;
    out.require(std::abs(e.mean - 1.0) <= allowance,
                "mean " + fmt("%.4f", e.mean) + " +- " + fmt("%.4f", e.std_error));
    out.require(t < 120.0, "runtime " + fmt("%.1f s", t));
    return out;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"operator consistency", operator_consistency},
        {"exact exit time reproduction", getoor_reproduction},
        {"scheme correction benefit", scheme_correction},
        {"desingularization equivalence", desingularization_equivalence},
        {"asymptotic order", asymptotic_order},
        {"escape probability", escape_probability},
        {"qualitative orderings", qualitative_orderings},
        {"discontinuity detection", discontinuity_detection},
        {"monte carlo cross-check", monte_carlo},
    };
    int failed = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failed += o.pass ? 0 : 1;
        std::printf("[%s] %d. %s: %s\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %d criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
