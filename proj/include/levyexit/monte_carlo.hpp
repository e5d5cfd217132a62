#pragma once

#include "levyexit/execution.hpp"
#include "levyexit/problem.hpp"

#include <cstdint>
#include <random>

namespace levyexit {

/// Per-path random stream: mt19937_64 seeded with splitmix64 of
/// (seed, path index). Variates are derived by hand so the output does not
/// depend on the standard library's distribution implementations.
class PathRng {
public:
    PathRng(std::uint64_t seed, std::uint64_t path);

    /// Uniform on the open interval (0, 1), 53-bit resolution.
    double uniform();
    /// Standard normal (Box-Muller, second variate cached).
    double normal();
    /// Unit-rate exponential.
    double exponential();

private:
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Standard symmetric alpha-stable variate, E exp(i l S) = exp(-|l|^alpha),
/// by the Chambers-Mallows-Stuck transform. alpha = 2 returns sqrt(2) Z.
double sample_alpha_stable(double alpha, PathRng& rng);

struct MCEstimate {
    double mean = 0.0;
    /// sample standard deviation / sqrt(n_paths)
    double std_error = 0.0;
    long n_paths = 0;
    double dt = 0.0;
    std::uint64_t seed = 0;
    /// Paths stopped by the step cap before leaving the domain.
    double truncated_fraction = 0.0;
    long long total_steps = 0;
};

struct MCOptions {
    /// Step cap per path; a capped path contributes its capped time.
    long long max_steps = 100'000'000;
    /// BudgetExhausted is thrown when more paths than this are capped.
    double max_truncated_fraction = 0.01;
    Execution exec = Execution::Parallel;
};

/// Euler scheme X += f dt + sqrt(d dt) Z + (eps dt)^{1/alpha} S, stopped at the
/// first step outside (a, b). Returns a zero estimate when x0 is not inside.
MCEstimate mc_exit_time(const ProblemSpec& problem, double x0, double dt, long n_paths,
                        std::uint64_t seed, const MCOptions& opts = {});

} // namespace levyexit
