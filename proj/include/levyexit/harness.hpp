#pragma once

#include "levyexit/config.hpp"
#include "levyexit/execution.hpp"
#include "levyexit/profile.hpp"

#include <optional>
#include <string>
#include <vector>

namespace levyexit {

/// Error series against an oracle, indexed either by resolution J or by eps.
struct ConvergenceReport {
    std::string abscissa_name = "J";
    std::vector<double> abscissa;
    std::vector<double> errors;
    double alpha = 0.0;
    double probe_point = 0.0;
    double fitted_slope = 0.0;
    std::string reference;
    std::string study;
};

/// Least-squares slope of log10(y) against log10(x).
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

bool resolve_one_sided(const ExperimentConfig& cfg, const ProblemSpec& problem);

/// Solves the first problem of the config at its first resolution.
SolutionProfile run_profile(const ExperimentConfig& cfg, Execution exec = Execution::Parallel);

/// Error at the probe (or sup-norm) for every J. Studies: the discrete
/// operator on 1 - x^2 against its closed form, or the punched-hole /
/// corrected exit-time solution of the pure-jump problem on (-b, b)
/// against the exact exit time.
ConvergenceReport run_convergence(const ExperimentConfig& cfg, Execution exec = Execution::Parallel);

/// |U(probe) - (u0 + eps u1)(probe)| for every eps in the config, at the
/// first resolution.
ConvergenceReport run_eps_scaling(const ExperimentConfig& cfg, Execution exec = Execution::Parallel);

struct SweepCell {
    ProblemSpec problem;
    int resolution = 0;
    std::optional<SolutionProfile> profile;
    std::string error;
};

/// Cartesian product alpha -> eps -> d -> a -> b -> J (last axis fastest).
/// Failing cells keep their error message; the others are unaffected.
std::vector<SweepCell> run_sweep(const ExperimentConfig& cfg, Execution exec = Execution::Parallel);

/// Quadratic extrapolation of the interior values to each boundary,
/// compared with the boundary values themselves.
struct BoundaryDiagnostic {
    double left_limit = 0.0;
    double right_limit = 0.0;
    double left_value = 0.0;
    double right_value = 0.0;
    double jump() const;
};

BoundaryDiagnostic boundary_diagnostic(const SolutionProfile& profile);

/// Value of a profile at a node (throws NonNodeProbe otherwise).
double value_at(const SolutionProfile& profile, double x);

} // namespace levyexit
