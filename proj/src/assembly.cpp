#include "levyexit/assembly.hpp"

#include "levyexit/error.hpp"
#include "levyexit/special_functions.hpp"

#include <cmath>
#include <cstdlib>

namespace levyexit {

std::string to_string(Scheme scheme) {
    switch (scheme) {
    case Scheme::PunchedHole: return "punched_hole";
    case Scheme::Corrected: return "corrected";
    case Scheme::PrincipalValue: return "principal_value";
    }
    return "unknown";
}

Scheme parse_scheme(const std::string& text) {
    if (text == "punched_hole" || text == "nm1d1") {
        return Scheme::PunchedHole;
    }
    if (text == "corrected" || text == "nm1d2") {
        return Scheme::Corrected;
    }
    if (text == "principal_value" || text == "pv" || text == "nm1d3") {
        return Scheme::PrincipalValue;
    }
    throw Error(ErrorCode::ConfigError, "unknown scheme '" + text + "'");
}

double second_difference_coefficient(const ProblemSpec& problem, double h, Scheme scheme) {
    const double half_d = 0.5 * problem.d;
    if (!problem.has_jumps() || scheme == Scheme::PunchedHole) {
        return half_d;
    }
    const double jump = problem.eps * c_alpha(problem.alpha);
    return half_d - jump * riemann_zeta(problem.alpha - 1.0) * std::pow(h, 2.0 - problem.alpha);
}

bool recommend_one_sided(const ProblemSpec& problem) {
    return problem.has_jumps() && problem.alpha < 1.0 && problem.d == 0.0 &&
           !drift_is_zero(problem.drift);
}

namespace {

void check_domain(const ProblemSpec& problem, const Grid& grid) {
    const double scale = std::max({1.0, std::abs(grid.a), std::abs(grid.b)});
    if (std::abs(problem.domain.a - grid.a) > 1e-12 * scale ||
        std::abs(problem.domain.b - grid.b) > 1e-12 * scale) {
        throw Error(ErrorCode::DomainMismatch, "grid and problem domains differ");
    }
}

/// Row stencils of the discrete generator on one grid. Rows are built from
/// read-only tables, so any row can be produced independently.
class Stencil {
public:
    Stencil(const ProblemSpec& problem, const Grid& grid, Scheme scheme, bool one_sided)
        : n_(grid.n_cells), h_(grid.h), one_sided_(one_sided),
          two_branch_(scheme != Scheme::PrincipalValue) {
        validate(problem);
        check_domain(problem, grid);
        diffusion_ = second_difference_coefficient(problem, h_, scheme) / (h_ * h_);
        drift_.resize(n_ + 1);
        for (std::size_t j = 0; j <= n_; ++j) {
            drift_[j] = drift_eval(problem.drift, grid.nodes[j]);
        }
        absorption_.assign(n_ + 1, 0.0);
        exterior_right_.assign(n_ + 1, 0.0);
        moment_.assign(n_ + 1, 0.0);
        if (!problem.has_jumps()) {
            return;
        }
        const double alpha = problem.alpha;
        jump_ = problem.eps * c_alpha(alpha);
        // kernel_[k] = h |k h|^{-1-alpha}
        kernel_.resize(n_ + 1);
        kernel_[0] = 0.0;
        for (std::size_t k = 1; k <= n_; ++k) {
            kernel_[k] = h_ * std::pow(static_cast<double>(k) * h_, -1.0 - alpha);
        }
        for (std::size_t j = 1; j < n_; ++j) {
            const double left = grid.nodes[j] - grid.a;
            const double right = grid.b - grid.nodes[j];
            exterior_right_[j] = jump_ / alpha * std::pow(right, -alpha);
            absorption_[j] = jump_ / alpha * std::pow(left, -alpha) + exterior_right_[j];
            if (two_branch_) {
                // sum'' over the symmetric window |k| <= min(j, N-j) of x_k h / |x_k|^{1+alpha}
                const auto m = static_cast<long>(std::min(j, n_ - j));
                double s = 0.0;
                for (long k = -m; k <= m; ++k) {
                    if (k == 0) {
                        continue;
                    }
                    const double w = (k == -m || k == m) ? 0.5 : 1.0;
                    s += w * (static_cast<double>(k) * h_) * kernel_[static_cast<std::size_t>(std::labs(k))];
                }
                moment_[j] = s;
            }
        }
    }

    std::size_t n_cells() const { return n_; }
    double exterior_right(std::size_t j) const { return exterior_right_[j]; }

    /// coeff[i] multiplies U_i, i = 0..N, in row j.
    void row(std::size_t j, std::span<double> coeff) const {
        std::fill(coeff.begin(), coeff.end(), 0.0);
        coeff[j - 1] += diffusion_;
        coeff[j] += -2.0 * diffusion_;
        coeff[j + 1] += diffusion_;

        const double fj = drift_[j] / (2.0 * h_);
        if (one_sided_ && j == 1) {
            coeff[1] += -3.0 * fj;
            coeff[2] += 4.0 * fj;
            coeff[3] += -fj;
        } else if (one_sided_ && j == n_ - 1) {
            coeff[n_ - 1] += 3.0 * fj;
            coeff[n_ - 2] += -4.0 * fj;
            coeff[n_ - 3] += fj;
        } else {
            coeff[j + 1] += fj;
            coeff[j - 1] -= fj;
        }

        if (jump_ == 0.0) {
            return;
        }
        coeff[j] -= absorption_[j];
        double diagonal = 0.0;
        for (std::size_t i = 0; i <= n_; ++i) {
            if (i == j) {
                continue;
            }
            const double w = (i == 0 || i == n_) ? 0.5 : 1.0;
            const double c = jump_ * w * kernel_[i > j ? i - j : j - i];
            coeff[i] += c;
            diagonal += c;
        }
        coeff[j] -= diagonal;
        if (two_branch_) {
            const double c = jump_ * moment_[j] / (2.0 * h_);
            coeff[j + 1] -= c;
            coeff[j - 1] += c;
        }
    }

    /// Row j applied to nodal values u, written in difference form.
    double apply(std::size_t j, std::span<const double> u) const {
        double r = diffusion_ * (u[j - 1] - 2.0 * u[j] + u[j + 1]);
        const double fj = drift_[j] / (2.0 * h_);
        if (one_sided_ && j == 1) {
            r += fj * (-3.0 * u[1] + 4.0 * u[2] - u[3]);
        } else if (one_sided_ && j == n_ - 1) {
            r += fj * (3.0 * u[n_ - 1] - 4.0 * u[n_ - 2] + u[n_ - 3]);
        } else {
            r += fj * (u[j + 1] - u[j - 1]);
        }
        if (jump_ == 0.0) {
            return r;
        }
        r -= absorption_[j] * u[j];
        double nonlocal = 0.0;
        for (std::size_t i = 0; i <= n_; ++i) {
            if (i == j) {
                continue;
            }
            const double w = (i == 0 || i == n_) ? 0.5 : 1.0;
            nonlocal += w * kernel_[i > j ? i - j : j - i] * (u[i] - u[j]);
        }
        r += jump_ * nonlocal;
        if (two_branch_) {
            r -= jump_ * moment_[j] * (u[j + 1] - u[j - 1]) / (2.0 * h_);
        }
        return r;
    }

private:
    std::size_t n_;
    double h_;
    bool one_sided_;
    bool two_branch_;
    double diffusion_ = 0.0;
    double jump_ = 0.0;
    std::vector<double> kernel_;
    std::vector<double> drift_;
    std::vector<double> absorption_;
    std::vector<double> exterior_right_;
    std::vector<double> moment_;
};

enum class Exterior { Zero, OneOnRight };

LinearSystem assemble(const Stencil& stencil, Exterior exterior, Execution exec) {
    const std::size_t n = stencil.n_cells();
    const std::size_t m = n - 1;
    LinearSystem sys;
    sys.matrix = DenseMatrix(m, m);
    sys.rhs.assign(m, 0.0);
    sys.node_map.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        sys.node_map[i] = i + 1;
    }

    const bool parallel = exec == Execution::Parallel;
#pragma omp parallel if (parallel)
    {
        std::vector<double> coeff(n + 1);
#pragma omp for schedule(static)
        for (std::size_t j = 1; j < n; ++j) {
            stencil.row(j, coeff);
            auto out = sys.matrix.row(j - 1);
            std::copy(coeff.begin() + 1, coeff.begin() + static_cast<std::ptrdiff_t>(n), out.begin());
            if (exterior == Exterior::Zero) {
                sys.rhs[j - 1] = -1.0;
            } else {
                // U_0 = 0, U_N = 1 and the jump mass landing beyond b
                sys.rhs[j - 1] = -stencil.exterior_right(j) - coeff[n];
            }
        }
    }
    return sys;
}

} // namespace

LinearSystem assemble_exit_time(const ProblemSpec& problem, const Grid& grid, Scheme scheme,
                                bool one_sided_drift, Execution exec) {
    if (problem.kind != ProblemKind::ExitTime) {
        throw Error(ErrorCode::WrongProblemKind, "assemble_exit_time needs kind = exit_time");
    }
    const Stencil stencil(problem, grid, scheme, one_sided_drift);
    return assemble(stencil, Exterior::Zero, exec);
}

LinearSystem assemble_escape(const ProblemSpec& problem, const Grid& grid, Scheme scheme,
                             bool one_sided_drift, Execution exec) {
    if (problem.kind != ProblemKind::EscapeRight) {
        throw Error(ErrorCode::WrongProblemKind,
                    "assemble_escape needs kind = escape_right (reflect escape_left first)");
    }
    const Stencil stencil(problem, grid, scheme, one_sided_drift);
    return assemble(stencil, Exterior::OneOnRight, exec);
}

std::vector<double> operator_apply(const ProblemSpec& problem, const Grid& grid,
                                   std::span<const double> values, Scheme scheme,
                                   bool one_sided_drift, Execution exec) {
    if (values.size() != grid.n_cells + 1) {
        throw Error(ErrorCode::LengthMismatch, "operator_apply expects one value per grid node");
    }
    const Stencil stencil(problem, grid, scheme, one_sided_drift);
    const std::size_t n = grid.n_cells;
    std::vector<double> out(n - 1);
    const bool parallel = exec == Execution::Parallel;
#pragma omp parallel for if (parallel) schedule(static)
    for (std::size_t j = 1; j < n; ++j) {
        out[j - 1] = stencil.apply(j, values);
    }
    return out;
}

} // namespace levyexit
