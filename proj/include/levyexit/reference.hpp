#pragma once

#include "levyexit/problem.hpp"

#include <memory>
#include <vector>

namespace levyexit {

/// Generator applied to u(x) = 1 - x^2 on (-1, 1) with d = 0, f = 0, eps = 1.
/// Separate branch for alpha = 1 (selected when |alpha - 1| < 1e-12).
double lhs_closed_form(double alpha, double x);

/// Mean exit time of the symmetric alpha-stable process (eps = 1, d = 0,
/// f = 0) from (-b, b). alpha = 2 gives the Brownian limit (b^2 - x^2)/2.
double getoor_exit_time(double alpha, double b, double x);

/// Probability that the symmetric alpha-stable process started at x leaves
/// (-b, b) into [b, inf). Evaluated by quadrature after y = b sin(theta).
double escape_prob_closed_form(double alpha, double b, double x);

/// First-order coefficient of the small-eps expansion for f = 0, d = 1 on (-1, 1).
double asymptotic_u1_closed_form(double alpha, double x);

/// u0 + eps u1 for the mean exit time as eps -> 0. u0 solves
/// (d/2) u0'' + f u0' = -1 with zero boundary values; u1 solves the same
/// equation with right-hand side -g, where g is the jump generator applied to
/// u0 (extended by zero outside [a, b]).
class AsymptoticSolution {
public:
    AsymptoticSolution(const ProblemSpec& problem, int order);
    ~AsymptoticSolution();
    AsymptoticSolution(AsymptoticSolution&&) noexcept;
    AsymptoticSolution& operator=(AsymptoticSolution&&) noexcept;

    int order() const { return order_; }
    double eps() const { return eps_; }

    double u0(double x) const;
    /// Throws ErrorCode::InvalidOptions for an order-0 solution.
    double u1(double x) const;
    /// C_alpha times the principal-value jump integral of u0 at interior x.
    double g(double x) const;
    /// u0 + eps u1 (u0 alone at order 0).
    double value(double x) const;

    /// Constants of integration: u0' = e^{-Phi}(A1 - ...), u1' = e^{-Phi}(A3 - ...).
    /// A2 = A4 = 0 since all integrals start at a.
    double a1() const;
    double a3() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    int order_;
    double eps_;
};

/// Requires d > 0 (ErrorCode::InvalidDiffusion) and order in {0, 1}.
AsymptoticSolution asymptotic_exit_time(const ProblemSpec& problem, int order);

} // namespace levyexit
