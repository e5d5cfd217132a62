#include "levyexit/linsolve.hpp"

#include "levyexit/error.hpp"

#include <cmath>
#include <numeric>

namespace levyexit {

std::string to_string(SolveMethod method) {
    return method == SolveMethod::LU ? "lu" : "gmres";
}

SolveMethod parse_solve_method(const std::string& text) {
    if (text == "lu") {
        return SolveMethod::LU;
    }
    if (text == "gmres") {
        return SolveMethod::GMRES;
    }
    throw Error(ErrorCode::ConfigError, "unknown solver '" + text + "'");
}

void validate(const SolveOptions& opts) {
    if (!(opts.rel_tol > 0.0 && opts.rel_tol <= 1e-2)) {
        throw Error(ErrorCode::InvalidOptions, "rel_tol must lie in (0, 1e-2]");
    }
    if (opts.gmres_restart < 5) {
        throw Error(ErrorCode::InvalidOptions, "gmres_restart must be at least 5");
    }
    if (opts.max_iter < 0) {
        throw Error(ErrorCode::InvalidOptions, "max_iter must be non-negative");
    }
}

namespace {

double dot(std::span<const double> x, std::span<const double> y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += x[i] * y[i];
    }
    return s;
}

double norm2(std::span<const double> x) { return std::sqrt(dot(x, x)); }

void check_system(const LinearSystem& system) {
    const auto& m = system.matrix;
    if (m.rows() != m.cols() || m.rows() != system.rhs.size()) {
        throw Error(ErrorCode::LengthMismatch, "system matrix must be square and match rhs");
    }
    for (double v : m.data()) {
        if (!std::isfinite(v)) {
            throw Error(ErrorCode::DomainError, "system matrix has non-finite entries");
        }
    }
}

} // namespace

LuFactorization::LuFactorization(DenseMatrix m, Execution exec) : lu_(std::move(m)) {
    const std::size_t n = lu_.rows();
    if (n != lu_.cols()) {
        throw Error(ErrorCode::LengthMismatch, "LU needs a square matrix");
    }
    perm_.resize(n);
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    const bool parallel = exec == Execution::Parallel;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(lu_(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(lu_(i, k));
            if (v > best) {
                best = v;
                p = i;
            }
        }
        if (best == 0.0) {
            throw Error(ErrorCode::SingularMatrix,
                        "zero pivot in column " + std::to_string(k) + " after pivoting");
        }
        if (p != k) {
            auto rk = lu_.row(k);
            auto rp = lu_.row(p);
            std::swap_ranges(rk.begin(), rk.end(), rp.begin());
            std::swap(perm_[k], perm_[p]);
        }
        const double pivot = lu_(k, k);
        const auto pivot_row = std::as_const(lu_).row(k);
#pragma omp parallel for if (parallel && n - k > 64) schedule(static)
        for (std::size_t i = k + 1; i < n; ++i) {
            auto r = lu_.row(i);
            const double l = r[k] / pivot;
            r[k] = l;
            if (l != 0.0) {
                for (std::size_t j = k + 1; j < n; ++j) {
                    r[j] -= l * pivot_row[j];
                }
            }
        }
    }
}

std::vector<double> LuFactorization::solve(std::span<const double> rhs) const {
    const std::size_t n = lu_.rows();
    if (rhs.size() != n) {
        throw Error(ErrorCode::LengthMismatch, "rhs length does not match LU order");
    }
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = rhs[perm_[i]];
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = lu_.row(i);
        double s = x[i];
        for (std::size_t j = 0; j < i; ++j) {
            s -= r[j] * x[j];
        }
        x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
        const auto r = lu_.row(i);
        double s = x[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            s -= r[j] * x[j];
        }
        x[i] = s / r[i];
    }
    return x;
}

std::vector<double> lu_solve(const LinearSystem& system, Execution exec) {
    check_system(system);
    return LuFactorization(system.matrix, exec).solve(system.rhs);
}

SolveResult gmres_solve(const LinearSystem& system, const SolveOptions& opts) {
    check_system(system);
    validate(opts);
    const DenseMatrix& a = system.matrix;
    const std::size_t n = system.order();
    const int max_iter = opts.max_iter > 0 ? opts.max_iter : static_cast<int>(10 * n);
    const auto restart = static_cast<std::size_t>(std::min<int>(opts.gmres_restart, std::max<int>(1, static_cast<int>(n))));

    std::vector<double> inv_diag(n, 1.0);
    if (opts.jacobi) {
        for (std::size_t i = 0; i < n; ++i) {
            if (a(i, i) != 0.0) {
                inv_diag[i] = 1.0 / a(i, i);
            }
        }
    }

    SolveResult result;
    result.method = SolveMethod::GMRES;
    result.x.assign(n, 0.0);
    const double bnorm = norm2(system.rhs);
    if (bnorm == 0.0) {
        return result;
    }

    auto true_residual = [&](const std::vector<double>& x) {
        std::vector<double> r = multiply(a, x);
        for (std::size_t i = 0; i < n; ++i) {
            r[i] = system.rhs[i] - r[i];
        }
        return r;
    };

    std::vector<double> r(system.rhs.begin(), system.rhs.end());
    double rel = 1.0;
    int total = 0;
    // Krylov basis (restart + 1 vectors), Hessenberg in column-major, Givens rotations
    std::vector<std::vector<double>> v(restart + 1, std::vector<double>(n));
    std::vector<std::vector<double>> hess(restart, std::vector<double>(restart + 1));
    std::vector<double> cs(restart), sn(restart), g(restart + 1);
    std::vector<double> z(n);

    while (true) {
        const double beta = norm2(r);
        rel = beta / bnorm;
        if (rel < opts.rel_tol) {
            break;
        }
        if (total >= max_iter) {
            result.iterations = total;
            result.residual = rel;
            throw NoConvergenceError(result.x, rel, total);
        }
        for (std::size_t i = 0; i < n; ++i) {
            v[0][i] = r[i] / beta;
        }
        std::fill(g.begin(), g.end(), 0.0);
        g[0] = beta;
        std::size_t k = 0;
        for (; k < restart && total < max_iter; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                z[i] = inv_diag[i] * v[k][i];
            }
            std::vector<double> w = multiply(a, z);
            auto& hk = hess[k];
            std::fill(hk.begin(), hk.end(), 0.0);
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t i = 0; i <= k; ++i) {
                    const double c = dot(w, v[i]);
                    hk[i] += c;
                    for (std::size_t t = 0; t < n; ++t) {
                        w[t] -= c * v[i][t];
                    }
                }
            }
            const double wnorm = norm2(w);
            hk[k + 1] = wnorm;
            if (wnorm > 0.0) {
                for (std::size_t t = 0; t < n; ++t) {
                    v[k + 1][t] = w[t] / wnorm;
                }
            }
            for (std::size_t i = 0; i < k; ++i) {
                const double t0 = cs[i] * hk[i] + sn[i] * hk[i + 1];
                hk[i + 1] = -sn[i] * hk[i] + cs[i] * hk[i + 1];
                hk[i] = t0;
            }
            const double denom = std::hypot(hk[k], hk[k + 1]);
            cs[k] = hk[k] / denom;
            sn[k] = hk[k + 1] / denom;
            hk[k] = denom;
            hk[k + 1] = 0.0;
            g[k + 1] = -sn[k] * g[k];
            g[k] = cs[k] * g[k];
            ++total;
            const double estimate = std::abs(g[k + 1]) / bnorm;
            result.residual_history.push_back(estimate);
            if (estimate < opts.rel_tol || wnorm == 0.0) {
                ++k;
                break;
            }
        }
        // back substitution for the k x k triangular system
        std::vector<double> y(k);
        for (std::size_t i = k; i-- > 0;) {
            double s = g[i];
            for (std::size_t j = i + 1; j < k; ++j) {
                s -= hess[j][i] * y[j];
            }
            y[i] = s / hess[i][i];
        }
        std::fill(z.begin(), z.end(), 0.0);
        for (std::size_t j = 0; j < k; ++j) {
            for (std::size_t t = 0; t < n; ++t) {
                z[t] += y[j] * v[j][t];
            }
        }
        for (std::size_t t = 0; t < n; ++t) {
            result.x[t] += inv_diag[t] * z[t];
        }
        r = true_residual(result.x);
    }
    result.iterations = total;
    result.residual = rel;
    return result;
}

SolveResult solve(const LinearSystem& system, const SolveOptions& opts) {
    if (opts.method == SolveMethod::GMRES) {
        return gmres_solve(system, opts);
    }
    SolveResult result;
    result.method = SolveMethod::LU;
    result.x = lu_solve(system);
    std::vector<double> r = multiply(system.matrix, result.x);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = system.rhs[i] - r[i];
    }
    const double bnorm = norm2(system.rhs);
    result.residual = bnorm > 0.0 ? norm2(r) / bnorm : norm2(r);
    return result;
}

double relative_residual(const LinearSystem& system, std::span<const double> x) {
    std::vector<double> r = multiply(system.matrix, x);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] -= system.rhs[i];
    }
    return norm_inf(r) / (norm_inf(system.matrix) * norm_inf(x) + norm_inf(system.rhs));
}

} // namespace levyexit
