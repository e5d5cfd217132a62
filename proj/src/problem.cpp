#include "levyexit/problem.hpp"

#include "levyexit/error.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace levyexit {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

double parse_number(const std::string& token, const std::string& context) {
    const std::string t = trim(token);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(t, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (t.empty() || used != t.size()) {
        throw Error(ErrorCode::ConfigError, "cannot parse number '" + t + "' in " + context);
    }
    return value;
}

} // namespace

double drift_eval(const DriftSpec& f, double x) {
    return std::visit(overloaded{
                          [](const drift::Zero&) { return 0.0; },
                          [x](const drift::Linear& l) { return l.slope * x; },
                          [x](const drift::DoubleWell&) { return x - x * x * x; },
                          [x](const drift::Polynomial& p) {
                              double acc = 0.0;
                              for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
                                  acc = acc * x + *it;
                              }
                              return acc;
                          },
                      },
                      f);
}

std::vector<double> drift_coefficients(const DriftSpec& f) {
    std::vector<double> c = std::visit(
        overloaded{
            [](const drift::Zero&) { return std::vector<double>{}; },
            [](const drift::Linear& l) { return std::vector<double>{0.0, l.slope}; },
            [](const drift::DoubleWell&) { return std::vector<double>{0.0, 1.0, 0.0, -1.0}; },
            [](const drift::Polynomial& p) { return p.coeffs; },
        },
        f);
    while (!c.empty() && c.back() == 0.0) {
        c.pop_back();
    }
    return c;
}

bool drift_is_zero(const DriftSpec& f) { return drift_coefficients(f).empty(); }

DriftSpec reflect_drift(const DriftSpec& f) {
    return std::visit(overloaded{
                          [](const drift::Zero&) -> DriftSpec { return drift::Zero{}; },
                          // -(c * (-x)) = c x
                          [](const drift::Linear& l) -> DriftSpec { return l; },
                          // -((-x) - (-x)^3) = x - x^3
                          [](const drift::DoubleWell&) -> DriftSpec { return drift::DoubleWell{}; },
                          [](const drift::Polynomial& p) -> DriftSpec {
                              drift::Polynomial r{p.coeffs};
                              for (std::size_t k = 0; k < r.coeffs.size(); ++k) {
                                  // -c_k (-1)^k
                                  if (k % 2 == 0) {
                                      r.coeffs[k] = -r.coeffs[k];
                                  }
                              }
                              return r;
                          },
                      },
                      f);
}

std::string drift_to_string(const DriftSpec& f) {
    return std::visit(overloaded{
                          [](const drift::Zero&) { return std::string("zero"); },
                          [](const drift::Linear& l) {
                              return "linear(" + format_number(l.slope) + ")";
                          },
                          [](const drift::DoubleWell&) { return std::string("double_well"); },
                          [](const drift::Polynomial& p) {
                              std::string s = "poly(";
                              for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
                                  if (k > 0) {
                                      s += ' ';
                                  }
                                  s += format_number(p.coeffs[k]);
                              }
                              return s + ")";
                          },
                      },
                      f);
}

DriftSpec parse_drift(const std::string& text) {
    const std::string t = trim(text);
    if (t == "zero" || t == "0") {
        return drift::Zero{};
    }
    if (t == "double_well") {
        return drift::DoubleWell{};
    }
    if (t == "ou") {
        return drift::Linear{-1.0};
    }
    const auto open = t.find('(');
    if (open == std::string::npos || t.back() != ')') {
        throw Error(ErrorCode::ConfigError, "unknown drift '" + t + "'");
    }
    const std::string name = trim(t.substr(0, open));
    const std::string args = t.substr(open + 1, t.size() - open - 2);
    if (name == "linear") {
        return drift::Linear{parse_number(args, "linear drift")};
    }
    if (name == "poly") {
        drift::Polynomial p;
        std::string spaced = args;
        for (char& ch : spaced) {
            if (ch == ',') {
                ch = ' ';
            }
        }
        std::istringstream is(spaced);
        std::string token;
        while (is >> token) {
            p.coeffs.push_back(parse_number(token, "polynomial drift"));
        }
        if (p.coeffs.empty()) {
            throw Error(ErrorCode::ConfigError, "poly() needs at least one coefficient");
        }
        return p;
    }
    throw Error(ErrorCode::ConfigError, "unknown drift '" + t + "'");
}

std::string to_string(ProblemKind kind) {
    switch (kind) {
    case ProblemKind::ExitTime: return "exit_time";
    case ProblemKind::EscapeRight: return "escape_right";
    case ProblemKind::EscapeLeft: return "escape_left";
    }
    return "unknown";
}

const ProblemSpec& validate(const ProblemSpec& p) {
    if (!std::isfinite(p.alpha)) {
        throw Error(ErrorCode::InvalidAlpha, "alpha must be finite");
    }
    if (p.has_jumps() && !(p.alpha > 0.0 && p.alpha < 2.0)) {
        throw Error(ErrorCode::InvalidAlpha, "alpha must lie in (0, 2) when eps > 0");
    }
    if (!p.has_jumps() && !(p.alpha > 0.0 && p.alpha <= 2.0)) {
        throw Error(ErrorCode::InvalidAlpha, "alpha must lie in (0, 2]");
    }
    if (!(p.eps >= 0.0) || !std::isfinite(p.eps)) {
        throw Error(ErrorCode::InvalidEps, "eps must be finite and non-negative");
    }
    if (!(p.d >= 0.0) || !std::isfinite(p.d)) {
        throw Error(ErrorCode::InvalidDiffusion, "d must be finite and non-negative");
    }
    if (p.eps == 0.0 && p.d == 0.0) {
        throw Error(ErrorCode::DegenerateOperator,
                    "eps = 0 and d = 0 leave a pure transport operator");
    }
    if (!(p.domain.a < p.domain.b) || !std::isfinite(p.domain.a) || !std::isfinite(p.domain.b)) {
        throw Error(ErrorCode::InvalidDomain, "domain must satisfy a < b");
    }
    for (double c : drift_coefficients(p.drift)) {
        if (!std::isfinite(c)) {
            throw Error(ErrorCode::ConfigError, "drift coefficients must be finite");
        }
    }
    return p;
}

ProblemSpec reflect(const ProblemSpec& p) {
    ProblemSpec r = p;
    r.drift = reflect_drift(p.drift);
    r.domain = Interval{-p.domain.b, -p.domain.a};
    if (p.kind == ProblemKind::EscapeLeft) {
        r.kind = ProblemKind::EscapeRight;
    } else if (p.kind == ProblemKind::EscapeRight) {
        r.kind = ProblemKind::EscapeLeft;
    }
    return r;
}

} // namespace levyexit
