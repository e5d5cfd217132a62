#include "levyexit/monte_carlo.hpp"

#include "levyexit/error.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace levyexit {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

PathRng::PathRng(std::uint64_t seed, std::uint64_t path)
    : engine_(splitmix64(splitmix64(seed) ^ path)) {}

double PathRng::uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double PathRng::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    const double theta = 2.0 * std::numbers::pi * uniform();
    cached_ = r * std::sin(theta);
    has_cached_ = true;
    return r * std::cos(theta);
}

double PathRng::exponential() { return -std::log(uniform()); }

double sample_alpha_stable(double alpha, PathRng& rng) {
    if (!(alpha > 0.0 && alpha <= 2.0)) {
        throw Error(ErrorCode::InvalidAlpha, "stable index must lie in (0, 2]");
    }
    if (alpha == 2.0) {
        return std::numbers::sqrt2 * rng.normal();
    }
    const double v = std::numbers::pi * (rng.uniform() - 0.5);
    if (alpha == 1.0) {
        return std::tan(v);
    }
    const double w = rng.exponential();
    return std::sin(alpha * v) / std::pow(std::cos(v), 1.0 / alpha) *
           std::pow(std::cos((1.0 - alpha) * v) / w, (1.0 - alpha) / alpha);
}

namespace {

struct PathOutcome {
    long long steps = 0;
    bool capped = false;
};

PathOutcome simulate_path(const ProblemSpec& p, double x0, double dt, std::uint64_t seed,
                          std::uint64_t path, long long max_steps) {
    PathRng rng(seed, path);
    const double a = p.domain.a;
    const double b = p.domain.b;
    const double gauss_scale = std::sqrt(p.d * dt);
    const double jump_scale = p.eps > 0.0 ? std::pow(p.eps * dt, 1.0 / p.alpha) : 0.0;
    const bool has_drift = !drift_is_zero(p.drift);
    double x = x0;
    for (long long n = 1; n <= max_steps; ++n) {
        double step = 0.0;
        if (has_drift) {
            step += drift_eval(p.drift, x) * dt;
        }
        if (gauss_scale > 0.0) {
            step += gauss_scale * rng.normal();
        }
        if (jump_scale > 0.0) {
            step += jump_scale * sample_alpha_stable(p.alpha, rng);
        }
        x += step;
        if (!(x > a && x < b)) {
            return {n, false};
        }
    }
    return {max_steps, true};
}

} // namespace

MCEstimate mc_exit_time(const ProblemSpec& problem, double x0, double dt, long n_paths,
                        std::uint64_t seed, const MCOptions& opts) {
    validate(problem);
    if (!(dt > 0.0) || n_paths < 1 || opts.max_steps < 1) {
        throw Error(ErrorCode::InvalidOptions, "need dt > 0, n_paths >= 1 and max_steps >= 1");
    }
    MCEstimate est;
    est.n_paths = n_paths;
    est.dt = dt;
    est.seed = seed;
    if (!(x0 > problem.domain.a && x0 < problem.domain.b)) {
        return est;
    }

    std::vector<PathOutcome> outcomes(static_cast<std::size_t>(n_paths));
    const bool parallel = opts.exec == Execution::Parallel;
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
    for (long i = 0; i < n_paths; ++i) {
        outcomes[static_cast<std::size_t>(i)] =
            simulate_path(problem, x0, dt, seed, static_cast<std::uint64_t>(i), opts.max_steps);
    }

    long capped = 0;
    double sum = 0.0;
    for (const auto& o : outcomes) {
        est.total_steps += o.steps;
        capped += o.capped ? 1 : 0;
        sum += static_cast<double>(o.steps) * dt;
    }
    est.mean = sum / static_cast<double>(n_paths);
    double sq = 0.0;
    for (const auto& o : outcomes) {
        const double dev = static_cast<double>(o.steps) * dt - est.mean;
        sq += dev * dev;
    }
    if (n_paths > 1) {
        est.std_error = std::sqrt(sq / static_cast<double>(n_paths - 1) / static_cast<double>(n_paths));
    }
    est.truncated_fraction = static_cast<double>(capped) / static_cast<double>(n_paths);
    if (est.truncated_fraction > opts.max_truncated_fraction) {
        throw Error(ErrorCode::BudgetExhausted,
                    std::to_string(capped) + " of " + std::to_string(n_paths) +
                        " paths hit the step cap");
    }
    return est;
}

} // namespace levyexit
