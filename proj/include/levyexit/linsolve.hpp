#pragma once

#include "levyexit/assembly.hpp"
#include "levyexit/dense_matrix.hpp"
#include "levyexit/execution.hpp"

#include <string>
#include <vector>

namespace levyexit {

enum class SolveMethod { LU, GMRES };

std::string to_string(SolveMethod method);
SolveMethod parse_solve_method(const std::string& text);

struct SolveOptions {
    SolveMethod method = SolveMethod::LU;
    int gmres_restart = 30;
    double rel_tol = 1e-10;
    /// 0 selects 10 * order.
    int max_iter = 0;
    bool jacobi = false;
};

/// Throws ErrorCode::InvalidOptions unless rel_tol is in (0, 1e-2] and restart >= 5.
void validate(const SolveOptions& opts);

struct SolveResult {
    std::vector<double> x;
    SolveMethod method = SolveMethod::LU;
    int iterations = 0;
    /// Relative residual ||r - M x||_2 / ||r||_2 of the returned iterate.
    double residual = 0.0;
    /// GMRES only: Arnoldi residual estimate after every inner iteration.
    std::vector<double> residual_history;
};

/// In-place LU factorization with partial (row) pivoting.
class LuFactorization {
public:
    explicit LuFactorization(DenseMatrix m, Execution exec = Execution::Parallel);

    std::vector<double> solve(std::span<const double> rhs) const;

    const DenseMatrix& packed() const { return lu_; }
    const std::vector<std::size_t>& pivots() const { return perm_; }

private:
    DenseMatrix lu_;
    std::vector<std::size_t> perm_;
};

std::vector<double> lu_solve(const LinearSystem& system, Execution exec = Execution::Parallel);

/// Restarted GMRES(m) from a zero initial guess, modified Gram-Schmidt with
/// one reorthogonalization pass, optional right Jacobi preconditioning.
/// Throws NoConvergenceError (carrying the best iterate) when max_iter runs out.
SolveResult gmres_solve(const LinearSystem& system, const SolveOptions& opts);

/// Dispatches on opts.method.
SolveResult solve(const LinearSystem& system, const SolveOptions& opts);

/// ||M x - r||_inf / (||M||_inf ||x||_inf + ||r||_inf)
double relative_residual(const LinearSystem& system, std::span<const double> x);

} // namespace levyexit
