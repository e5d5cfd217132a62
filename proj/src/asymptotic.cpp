#include "levyexit/reference.hpp"

#include "chebyshev.hpp"
#include "levyexit/error.hpp"
#include "levyexit/special_functions.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

namespace levyexit {

namespace {

constexpr std::size_t kChebyshevDegree = 96;
constexpr double kInnerTol = 1e-11;
constexpr unsigned kMaxDepth = 12;

double horner(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

std::vector<double> derivative(const std::vector<double>& c) {
    std::vector<double> d;
    for (std::size_t k = 1; k < c.size(); ++k) {
        d.push_back(static_cast<double>(k) * c[k]);
    }
    return d;
}

} // namespace

struct AsymptoticSolution::Impl {
    double a = 0.0;
    double b = 0.0;
    double d = 1.0;
    double alpha = 1.0;
    double calpha = 0.0;
    bool zero_drift = true;
    std::vector<double> f, df, d2f;
    std::vector<double> phi; // Phi(x) = (2/d) int_a^x f, as monomial coefficients
    detail::Chebyshev e_int;   // int_a^x e^{Phi}
    detail::Chebyshev psi_int; // int_a^x e^{-Phi}
    double a1 = 0.0;
    double a3 = 0.0;

    double phi_at(double x) const { return zero_drift ? 0.0 : horner(phi, x) - horner(phi, a); }
    double psi(double x) const { return zero_drift ? x - a : psi_int(x); }

    double du0(double x) const {
        if (zero_drift) {
            return (a + b - 2.0 * x) / d;
        }
        return std::exp(-phi_at(x)) * (a1 - 2.0 / d * e_int(x));
    }

    /// u0 at a point given by its distances to both ends; integrates from the
    /// nearer end so the value keeps full relative accuracy near the boundary.
    double u0_at(double from_a, double from_b) const {
        if (from_a <= 0.0 || from_b <= 0.0) {
            return 0.0;
        }
        if (zero_drift) {
            return from_a * from_b / d;
        }
        using GL = boost::math::quadrature::gauss<double, 30>;
        if (from_a <= from_b) {
            return GL::integrate([this](double s) { return du0(s); }, a, a + from_a);
        }
        return -GL::integrate([this](double s) { return du0(s); }, b - from_b, b);
    }

    // Higher derivatives from the ODE (d/2) u'' + f u' = -1 and its derivatives.
    double d2u0(double x) const { return -2.0 / d * (1.0 + horner(f, x) * du0(x)); }
    double d4u0(double x) const {
        if (zero_drift) {
            return 0.0;
        }
        const double u1 = du0(x);
        const double u2 = d2u0(x);
        const double u3 = -2.0 / d * (horner(df, x) * u1 + horner(f, x) * u2);
        return -2.0 / d * (horner(d2f, x) * u1 + 2.0 * horner(df, x) * u2 + horner(f, x) * u3);
    }

    /// g at the interior point a + from_a = b - from_b.
    double g(double from_a, double from_b) const {
        using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
        const double x = from_a <= from_b ? a + from_a : b - from_b;
        const double delta = std::min(from_a, from_b);
        const double reach = std::max(from_a, from_b);
        const double ux = u0_at(from_a, from_b);

        // mass of the jumps that leave [a, b]
        const double exterior =
            -ux / alpha * (std::pow(from_a, -alpha) + std::pow(from_b, -alpha));

        // symmetric window: int_0^delta (u(x+y) + u(x-y) - 2u(x)) / y^{1+alpha} dy,
        // with y = delta t^{1/(2-alpha)} absorbing the y^{1-alpha} weight
        const double taylor_cut = 1e-3 * (b - a);
        const double u2 = d2u0(x);
        const double u4 = d4u0(x);
        const double p = 1.0 / (2.0 - alpha);
        auto quotient = [&](double t) {
            const double y = delta * std::pow(t, p);
            if (y < taylor_cut) {
                return u2 + u4 * y * y / 12.0;
            }
            const double s = u0_at(from_a + y, from_b - y) + u0_at(from_a - y, from_b + y) - 2.0 * ux;
            return s / (y * y);
        };
        const double symmetric =
            std::pow(delta, 2.0 - alpha) / (2.0 - alpha) * GK::integrate(quotient, 0.0, 1.0, kMaxDepth, kInnerTol);

        // one-sided remainder on [delta, reach], y = delta e^s
        double remainder = 0.0;
        if (reach > delta) {
            const bool right = from_b > from_a;
            auto tail = [&](double s) {
                const double y = delta * std::exp(s);
                const double uy = right ? u0_at(from_a + y, from_b - y) : u0_at(from_a - y, from_b + y);
                return (uy - ux) * std::pow(y, -alpha);
            };
            remainder = GK::integrate(tail, 0.0, std::log(reach / delta), kMaxDepth, kInnerTol);
        }
        return calpha * (exterior + symmetric + remainder);
    }

    // z = a + L W(1 + t) on t in [-1, 1] with W' proportional to (1 - t^2)^5,
    // so nodes cluster where g is singular. W(v) + W(2 - v) = 1.
    static double stretch(double v) {
        double acc = 0.0;
        double binom = 1.0;
        for (int j = 0; j <= kStretch; ++j) {
            const double sign = j % 2 == 0 ? 1.0 : -1.0;
            acc += sign * binom * std::pow(2.0, kStretch - j) * std::pow(v, kStretch + 1 + j) /
                   (kStretch + 1 + j);
            binom = binom * (kStretch - j) / (j + 1);
        }
        return acc;
    }
    static double stretch_total() { return stretch(2.0); }

    /// t in [-1, 1] with a + L W(1 + t) = x.
    double unstretch(double x) const {
        const double len = b - a;
        const bool left = x - a <= b - x;
        const double target = (left ? x - a : b - x) / len * stretch_total();
        double lo = 0.0;
        double hi = 1.0;
        for (int it = 0; it < 200 && lo < hi; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi) {
                break;
            }
            (stretch(mid) < target ? lo : hi) = mid;
        }
        const double v = 0.5 * (lo + hi);
        return left ? v - 1.0 : 1.0 - v;
    }

    void build_first_order() {
        const double len = b - a;
        const double total = stretch_total();
        std::vector<double> h0(kForcingNodes);
        std::vector<double> h1(kForcingNodes);
        for (std::size_t k = 0; k < kForcingNodes; ++k) {
            const double theta = detail::Chebyshev::node_angle(k, kForcingNodes);
            const double sin_half = std::sin(0.5 * theta);
            const double cos_half = std::cos(0.5 * theta);
            // 1 - t and 1 + t without cancellation
            const double w_right = stretch(2.0 * sin_half * sin_half) / total;
            const double w_left = stretch(2.0 * cos_half * cos_half) / total;
            const double from_a = w_left <= 0.5 ? len * w_left : len - len * w_right;
            const double from_b = w_right <= 0.5 ? len * w_right : len - len * w_left;
            const double z = from_a <= from_b ? a + from_a : b - from_b;
            const double jac = len * std::pow(std::sin(theta), 2 * kStretch) / total;
            h0[k] = std::exp(phi_at(z)) * g(from_a, from_b) * jac;
            h1[k] = h0[k] * psi(z);
        }
        g_int = detail::Chebyshev::from_samples(h0, -1.0, 1.0).integral();
        g_psi_int = detail::Chebyshev::from_samples(h1, -1.0, 1.0).integral();
        // u1(b) = 0
        const double psi_b = psi(b);
        a3 = 2.0 / d * (psi_b * g_int(1.0) - g_psi_int(1.0)) / psi_b;
    }

    /// int_a^x e^{Phi(z)} g(z) (Psi(x) - Psi(z)) dz
    double forced(double x) const {
        const double t = unstretch(x);
        return psi(x) * g_int(t) - g_psi_int(t);
    }

    static constexpr int kStretch = 5;
    static constexpr std::size_t kForcingNodes = 160;
    detail::Chebyshev g_int;     // int_a^z e^{Phi} g, in the stretched variable
    detail::Chebyshev g_psi_int; // int_a^z e^{Phi} g Psi
};

AsymptoticSolution::AsymptoticSolution(const ProblemSpec& problem, int order)
    : impl_(std::make_unique<Impl>()), order_(order), eps_(problem.eps) {
    if (order != 0 && order != 1) {
        throw Error(ErrorCode::InvalidOptions, "asymptotic order must be 0 or 1");
    }
    if (!(problem.d > 0.0)) {
        throw Error(ErrorCode::InvalidDiffusion, "the small-eps expansion needs d > 0");
    }
    if (order == 1 && !(problem.alpha > 0.0 && problem.alpha < 2.0)) {
        throw Error(ErrorCode::InvalidAlpha, "first-order term needs alpha in (0, 2)");
    }
    if (!(problem.domain.a < problem.domain.b)) {
        throw Error(ErrorCode::InvalidDomain, "domain must satisfy a < b");
    }
    Impl& m = *impl_;
    m.a = problem.domain.a;
    m.b = problem.domain.b;
    m.d = problem.d;
    m.alpha = problem.alpha;
    m.f = drift_coefficients(problem.drift);
    m.zero_drift = m.f.empty();
    m.df = derivative(m.f);
    m.d2f = derivative(m.df);
    if (!m.zero_drift) {
        m.phi.assign(m.f.size() + 1, 0.0);
        for (std::size_t k = 0; k < m.f.size(); ++k) {
            m.phi[k + 1] = 2.0 / m.d * m.f[k] / static_cast<double>(k + 1);
        }
        m.e_int = detail::Chebyshev::fit([&m](double x) { return std::exp(m.phi_at(x)); }, m.a, m.b,
                                         kChebyshevDegree)
                      .integral();
        m.psi_int = detail::Chebyshev::fit([&m](double x) { return std::exp(-m.phi_at(x)); }, m.a, m.b,
                                           kChebyshevDegree)
                        .integral();
        const auto f_int = detail::Chebyshev::fit(
                               [&m](double x) { return std::exp(-m.phi_at(x)) * m.e_int(x); }, m.a,
                               m.b, kChebyshevDegree)
                               .integral();
        // u0(b) = A1 Psi(b) - (2/d) int_a^b e^{-Phi} E = 0
        m.a1 = 2.0 / m.d * f_int(m.b) / m.psi_int(m.b);
    } else {
        m.a1 = (m.b - m.a) / m.d;
    }
    if (order == 1) {
        m.calpha = c_alpha(problem.alpha);
        m.build_first_order();
    }
}

AsymptoticSolution::~AsymptoticSolution() = default;
AsymptoticSolution::AsymptoticSolution(AsymptoticSolution&&) noexcept = default;
AsymptoticSolution& AsymptoticSolution::operator=(AsymptoticSolution&&) noexcept = default;

double AsymptoticSolution::u0(double x) const {
    return impl_->u0_at(x - impl_->a, impl_->b - x);
}

double AsymptoticSolution::u1(double x) const {
    if (order_ < 1) {
        throw Error(ErrorCode::InvalidOptions, "u1 is not available at order 0");
    }
    const Impl& m = *impl_;
    if (x <= m.a || x >= m.b) {
        return 0.0;
    }
    return m.a3 * m.psi(x) - 2.0 / m.d * m.forced(x);
}

double AsymptoticSolution::g(double x) const {
    if (order_ < 1) {
        throw Error(ErrorCode::InvalidOptions, "g is not available at order 0");
    }
    const Impl& m = *impl_;
    if (!(x > m.a && x < m.b)) {
        throw Error(ErrorCode::DomainError, "g is defined at interior points only");
    }
    return m.g(x - m.a, m.b - x);
}

double AsymptoticSolution::value(double x) const {
    return order_ == 0 ? u0(x) : u0(x) + eps_ * u1(x);
}

double AsymptoticSolution::a1() const { return impl_->a1; }
double AsymptoticSolution::a3() const { return impl_->a3; }

AsymptoticSolution asymptotic_exit_time(const ProblemSpec& problem, int order) {
    return AsymptoticSolution(problem, order);
}

} // namespace levyexit
