#pragma once

#include <string>
#include <variant>
#include <vector>

namespace levyexit {

namespace drift {
struct Zero {};
/// f(x) = slope * x; slope = -1 is the Ornstein-Uhlenbeck case.
struct Linear {
    double slope = 0.0;
};
/// f(x) = x - x^3
struct DoubleWell {};
/// f(x) = sum_k coeffs[k] x^k
struct Polynomial {
    std::vector<double> coeffs;
};
} // namespace drift

using DriftSpec = std::variant<drift::Zero, drift::Linear, drift::DoubleWell, drift::Polynomial>;

double drift_eval(const DriftSpec& f, double x);

/// Monomial coefficients of f (lowest degree first, trailing zeros trimmed).
std::vector<double> drift_coefficients(const DriftSpec& f);

/// True when f vanishes identically.
bool drift_is_zero(const DriftSpec& f);

/// Drift of the mirrored process: x -> -x gives g(x) = -f(-x).
DriftSpec reflect_drift(const DriftSpec& f);

/// Round-trippable text form: "zero", "linear(-1)", "double_well", "poly(c0,c1,...)".
std::string drift_to_string(const DriftSpec& f);
DriftSpec parse_drift(const std::string& text);

enum class ProblemKind {
    ExitTime,
    EscapeRight, ///< target E = [b, inf)
    EscapeLeft,  ///< target E = (-inf, a]
};

std::string to_string(ProblemKind kind);

struct Interval {
    double a = -1.0;
    double b = 1.0;
};

/// One boundary-value problem for dX = f(X) dt + dL, where L has Gaussian
/// coefficient d and jump measure eps * C_alpha |y|^{-1-alpha} dy.
struct ProblemSpec {
    double alpha = 1.0;
    double eps = 1.0;
    double d = 0.0;
    DriftSpec drift = drift::Zero{};
    Interval domain{};
    ProblemKind kind = ProblemKind::ExitTime;

    bool has_jumps() const { return eps > 0.0; }
};

/// Returns the problem unchanged if it is well posed, otherwise throws the
/// error named after the first violated invariant (InvalidAlpha, InvalidEps,
/// InvalidDiffusion, DegenerateOperator, InvalidDomain).
const ProblemSpec& validate(const ProblemSpec& problem);

/// Mirror image under x -> -x. EscapeLeft maps to EscapeRight and vice versa.
ProblemSpec reflect(const ProblemSpec& problem);

} // namespace levyexit
