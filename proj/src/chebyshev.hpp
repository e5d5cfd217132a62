#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

namespace levyexit::detail {

/// Chebyshev series on [lo, hi]: f(x) ~ sum_j c_j T_j(y) - c_0 / 2.
class Chebyshev {
public:
    Chebyshev() = default;

    /// Angle of the k-th of n fitting nodes; the node is cos(angle) on [-1, 1].
    static double node_angle(std::size_t k, std::size_t n) {
        return std::numbers::pi * (static_cast<double>(k) + 0.5) / static_cast<double>(n);
    }

    template <class F>
    static Chebyshev fit(F&& f, double lo, double hi, std::size_t n) {
        std::vector<double> samples(n);
        const double mid = 0.5 * (hi + lo);
        const double half = 0.5 * (hi - lo);
        for (std::size_t k = 0; k < n; ++k) {
            samples[k] = f(mid + half * std::cos(node_angle(k, n)));
        }
        return from_samples(samples, lo, hi);
    }

    /// samples[k] is the function value at the k-th node.
    static Chebyshev from_samples(const std::vector<double>& samples, double lo, double hi) {
        const std::size_t n = samples.size();
        Chebyshev c;
        c.lo_ = lo;
        c.hi_ = hi;
        c.coeffs_.assign(n, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                s += samples[k] * std::cos(std::numbers::pi * static_cast<double>(j) *
                                           (static_cast<double>(k) + 0.5) / static_cast<double>(n));
            }
            c.coeffs_[j] = 2.0 * s / static_cast<double>(n);
        }
        return c;
    }

    double operator()(double x) const {
        const double y = (2.0 * x - lo_ - hi_) / (hi_ - lo_);
        const double y2 = 2.0 * y;
        double d = 0.0;
        double dd = 0.0;
        for (std::size_t j = coeffs_.size() - 1; j > 0; --j) {
            const double sv = d;
            d = y2 * d - dd + coeffs_[j];
            dd = sv;
        }
        return y * d - dd + 0.5 * coeffs_[0];
    }

    /// Antiderivative vanishing at lo.
    Chebyshev integral() const {
        const std::size_t n = coeffs_.size();
        Chebyshev r;
        r.lo_ = lo_;
        r.hi_ = hi_;
        r.coeffs_.assign(n, 0.0);
        const double con = 0.25 * (hi_ - lo_);
        double sum = 0.0;
        double fac = 1.0;
        for (std::size_t j = 1; j + 1 < n; ++j) {
            r.coeffs_[j] = con * (coeffs_[j - 1] - coeffs_[j + 1]) / static_cast<double>(j);
            sum += fac * r.coeffs_[j];
            fac = -fac;
        }
        r.coeffs_[n - 1] = con * coeffs_[n - 2] / static_cast<double>(n - 1);
        sum += fac * r.coeffs_[n - 1];
        r.coeffs_[0] = 2.0 * sum;
        return r;
    }

private:
    double lo_ = -1.0;
    double hi_ = 1.0;
    std::vector<double> coeffs_;
};

} // namespace levyexit::detail
