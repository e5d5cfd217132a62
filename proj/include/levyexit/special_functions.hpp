#pragma once

namespace levyexit {

/// Gamma function for real arguments (Lanczos, g = 7, with reflection below 1/2).
/// Throws ErrorCode::Pole at non-positive integers.
double gamma(double x);

/// Riemann zeta on (-1, 1), the only band the jump-quadrature correction
/// ever asks for (s = alpha - 1). Throws ErrorCode::DomainError outside.
double riemann_zeta(double s);

/// Normalizing constant of the symmetric alpha-stable jump measure
/// C_alpha |y|^{-1-alpha} dy. Requires 0 < alpha < 2.
double c_alpha(double alpha);

namespace detail {
/// Dirichlet eta via the Euler-transformed alternating series. The
/// transformed series converges for every real s, which the tests use to
/// cross-check the functional-equation branch of riemann_zeta.
double dirichlet_eta(double s);
} // namespace detail

} // namespace levyexit
