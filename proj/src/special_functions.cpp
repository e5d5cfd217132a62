#include "levyexit/special_functions.hpp"

#include "levyexit/error.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace levyexit {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr int kEulerTerms = 64;

} // namespace

double gamma(double x) {
    if (!std::isfinite(x)) {
        throw Error(ErrorCode::DomainError, "gamma: non-finite argument");
    }
    if (x <= 0.0 && x == std::floor(x)) {
        throw Error(ErrorCode::Pole, "gamma: pole at non-positive integer " + std::to_string(x));
    }
    if (x < 0.5) {
        // Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma(1.0 - x));
    }
    const double z = x - 1.0;
    double series = kLanczosCoeffs[0];
    for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
        series += kLanczosCoeffs[i] / (z + static_cast<double>(i));
    }
    const double t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * series;
}

namespace detail {

double dirichlet_eta(double s) {
    // eta(s) = sum_n (-1)^n (Delta^n a)_0 / 2^{n+1},  a_k = (k+1)^{-s}
    std::vector<double> diffs(kEulerTerms);
    for (int k = 0; k < kEulerTerms; ++k) {
        diffs[k] = std::pow(static_cast<double>(k + 1), -s);
    }
    double sum = 0.0;
    double scale = 0.5;
    for (int n = 0; n < kEulerTerms; ++n) {
        sum += scale * diffs[0];
        scale *= -0.5;
        for (int k = 0; k + 1 < kEulerTerms - n; ++k) {
            diffs[k] = diffs[k + 1] - diffs[k];
        }
    }
    return sum;
}

} // namespace detail

double riemann_zeta(double s) {
    if (!(s > -1.0 && s < 1.0)) {
        throw Error(ErrorCode::DomainError, "riemann_zeta: argument must lie in (-1, 1)");
    }
    if (s == 0.0) {
        return -0.5;
    }
    if (s > 0.0) {
        return detail::dirichlet_eta(s) / (1.0 - std::pow(2.0, 1.0 - s));
    }
    // Functional equation; 1 - s lies in (1, 2) where the eta series is benign.
    const double r = 1.0 - s;
    const double zeta_r = detail::dirichlet_eta(r) / (1.0 - std::pow(2.0, 1.0 - r));
    return std::pow(2.0, s) * std::pow(std::numbers::pi, s - 1.0) *
           std::sin(0.5 * std::numbers::pi * s) * gamma(r) * zeta_r;
}

double c_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 2.0)) {
        throw Error(ErrorCode::DomainError, "c_alpha: alpha must lie in (0, 2)");
    }
    return alpha / (std::pow(2.0, 1.0 - alpha) * std::sqrt(std::numbers::pi)) *
           gamma(0.5 * (1.0 + alpha)) / gamma(1.0 - 0.5 * alpha);
}

} // namespace levyexit
