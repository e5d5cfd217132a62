#pragma once

#include "levyexit/assembly.hpp"
#include "levyexit/linsolve.hpp"
#include "levyexit/problem.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace levyexit {

enum class OneSided { Auto, On, Off };
enum class StudyKind { Operator, PunchedHole, Corrected };
enum class ErrorNorm { Point, Sup };

std::string to_string(OneSided mode);
std::string to_string(StudyKind study);
std::string to_string(ErrorNorm norm);
OneSided parse_one_sided(const std::string& text);
StudyKind parse_study(const std::string& text);
ErrorNorm parse_error_norm(const std::string& text);

/// Everything one CLI run needs. Sweep axes are lists; single-problem
/// commands use the first entry of each.
struct ExperimentConfig {
    std::vector<double> alpha{1.0};
    std::vector<double> eps{1.0};
    std::vector<double> d{0.0};
    std::vector<double> a{-1.0};
    std::vector<double> b{1.0};
    /// a = -b for every swept b; the a axis is ignored.
    bool symmetric = false;
    DriftSpec drift = drift::Zero{};
    ProblemKind kind = ProblemKind::ExitTime;

    Scheme scheme = Scheme::Corrected;
    SolveOptions solver;
    OneSided one_sided = OneSided::Auto;

    /// Cells per unit length.
    std::vector<int> resolutions{80};
    double probe = -0.5;
    StudyKind study = StudyKind::Corrected;
    ErrorNorm error_norm = ErrorNorm::Point;

    double x0 = 0.0;
    double dt = 1e-4;
    long n_paths = 100000;
    std::uint64_t seed = 1;
    long long max_steps = 100'000'000;

    std::string output;
};

/// Flat "key = value" lines; '#' starts a comment; lists are comma separated.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);
/// Applies one "key=value" assignment on top of an existing config.
void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value);

/// Problem for one point of the sweep axes. alpha = 2 is the Gaussian
/// limit: the jump part becomes diffusion (d += 2 eps, eps = 0).
ProblemSpec make_problem(const ExperimentConfig& cfg, double alpha, double eps, double d, double a,
                         double b);
/// Problem at the first entry of every axis.
ProblemSpec first_problem(const ExperimentConfig& cfg);

} // namespace levyexit
