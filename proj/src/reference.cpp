#include "levyexit/reference.hpp"

#include "levyexit/error.hpp"
#include "levyexit/special_functions.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <numbers>

namespace levyexit {

namespace {

void require_alpha(double alpha, bool allow_two) {
    const bool ok = alpha > 0.0 && (allow_two ? alpha <= 2.0 : alpha < 2.0);
    if (!ok) {
        throw Error(ErrorCode::DomainError, "alpha out of range");
    }
}

} // namespace

double lhs_closed_form(double alpha, double x) {
    require_alpha(alpha, false);
    if (!(std::abs(x) < 1.0)) {
        throw Error(ErrorCode::DomainError, "lhs_closed_form needs |x| < 1");
    }
    const double c = c_alpha(alpha);
    if (std::abs(alpha - 1.0) < 1e-12) {
        return -c * (4.0 + 2.0 * x * std::log((1.0 - x) / (1.0 + x)));
    }
    const double left = std::pow(1.0 + x, 1.0 - alpha) *
                        ((1.0 - x) / alpha - 2.0 * x / (1.0 - alpha) + (1.0 + x) / (2.0 - alpha));
    const double right = std::pow(1.0 - x, 1.0 - alpha) *
                         ((1.0 + x) / alpha + 2.0 * x / (1.0 - alpha) + (1.0 - x) / (2.0 - alpha));
    return -c * (left + right);
}

double getoor_exit_time(double alpha, double b, double x) {
    require_alpha(alpha, true);
    if (!(b > 0.0) || std::abs(x) > b) {
        throw Error(ErrorCode::DomainError, "getoor_exit_time needs |x| <= b");
    }
    if (std::abs(x) == b) {
        return 0.0;
    }
    return std::sqrt(std::numbers::pi) * std::pow((b - x) * (b + x), 0.5 * alpha) /
           (std::pow(2.0, alpha) * gamma(1.0 + 0.5 * alpha) * gamma(0.5 + 0.5 * alpha));
}

double escape_prob_closed_form(double alpha, double b, double x) {
    require_alpha(alpha, true);
    if (!(b > 0.0) || std::abs(x) > b) {
        throw Error(ErrorCode::DomainError, "escape_prob_closed_form needs |x| <= b");
    }
    if (x == -b) {
        return 0.0;
    }
    if (x == b) {
        return 1.0;
    }
    // y = b sin(theta), then phi = theta + pi/2:
    // P = 2^{1-alpha} Gamma(alpha) / Gamma(alpha/2)^2 * int_0^{acos(-x/b)} sin(phi)^{alpha-1} dphi
    const double prefactor =
        std::pow(2.0, 1.0 - alpha) * gamma(alpha) / std::pow(gamma(0.5 * alpha), 2);
    boost::math::quadrature::tanh_sinh<double> integrator;
    auto integrand = [alpha](double phi) { return std::pow(std::sin(phi), alpha - 1.0); };
    constexpr double tol = 1e-14;
    const double half_pi = 0.5 * std::numbers::pi;
    double integral = 0.0;
    if (x <= 0.0) {
        integral = integrator.integrate(integrand, 0.0, std::acos(-x / b), tol);
    } else {
        // [0, pi/2] plus the mirror of [pi - acos(-x/b), pi/2]; keeps sin() away from pi
        integral = integrator.integrate(integrand, 0.0, half_pi, tol) +
                   integrator.integrate(integrand, std::acos(x / b), half_pi, tol);
    }
    return prefactor * integral;
}

double asymptotic_u1_closed_form(double alpha, double x) {
    require_alpha(alpha, false);
    if (std::abs(x) > 1.0) {
        throw Error(ErrorCode::DomainError, "asymptotic_u1_closed_form needs |x| <= 1");
    }
    const double c = c_alpha(alpha);
    const double p = 1.0 + x;
    const double m = 1.0 - x;
    if (std::abs(alpha - 1.0) < 1e-12) {
        auto xlogx = [](double scale, double t) { return t == 0.0 ? 0.0 : scale * std::log(t); };
        return 2.0 * c / 3.0 *
               (2.0 * x * x - 2.0 - 4.0 * std::numbers::ln2 + xlogx((2.0 + x) * m * m, m) +
                xlogx((2.0 - x) * p * p, p));
    }
    const double a = alpha;
    const double denom = a * (1.0 - a) * (2.0 - a) * (3.0 - a) * (4.0 - a);
    const double bracket = (2.0 - a) * std::pow(p, 4.0 - a) + (4.0 - a) * std::pow(p, 3.0 - a) * m +
                           (4.0 - a) * p * std::pow(m, 3.0 - a) + (2.0 - a) * std::pow(m, 4.0 - a) -
                           std::pow(2.0, 4.0 - a) * (2.0 - a);
    return 2.0 * c / denom * bracket;
}

} // namespace levyexit
