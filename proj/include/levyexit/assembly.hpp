#pragma once

#include "levyexit/dense_matrix.hpp"
#include "levyexit/execution.hpp"
#include "levyexit/grid.hpp"
#include "levyexit/problem.hpp"

#include <span>
#include <string>
#include <vector>

namespace levyexit {

/// Discretizations of the nonlocal generator.
enum class Scheme {
    /// Central differences plus punched-hole trapezoidal rule; the drift-moment
    /// (desingularizing) term is kept inside the symmetric window. No correction.
    PunchedHole,
    /// PunchedHole with the leading quadrature error folded into the
    /// second-difference coefficient C_h = d/2 - eps C_alpha zeta(alpha-1) h^(2-alpha).
    Corrected,
    /// Single principal-value equation: desingularizing term dropped, corrected C_h.
    PrincipalValue,
};

std::string to_string(Scheme scheme);
Scheme parse_scheme(const std::string& text);

/// Dense system over the interior unknowns U_1..U_{N-1}.
struct LinearSystem {
    DenseMatrix matrix;
    std::vector<double> rhs;
    /// node_map[i] is the grid index of unknown i (always i + 1).
    std::vector<std::size_t> node_map;

    std::size_t order() const { return rhs.size(); }
};

/// Coefficient multiplying the discrete second difference.
double second_difference_coefficient(const ProblemSpec& problem, double h, Scheme scheme);

/// The regime where a boundary discontinuity is expected (alpha < 1, d = 0,
/// non-zero drift) and one-sided drift differencing should be used.
bool recommend_one_sided(const ProblemSpec& problem);

/// Mean exit time system: A u = -1 in D, u = 0 outside.
LinearSystem assemble_exit_time(const ProblemSpec& problem, const Grid& grid, Scheme scheme,
                                bool one_sided_drift, Execution exec = Execution::Parallel);

/// Escape probability to E = [b, inf): A P = 0 in D, P = 0 left, P = 1 right.
LinearSystem assemble_escape(const ProblemSpec& problem, const Grid& grid, Scheme scheme,
                             bool one_sided_drift, Execution exec = Execution::Parallel);

/// Applies the discrete generator to nodal values u_0..u_N (u is taken as
/// zero outside [a, b]) and returns the N-1 interior results. Evaluated in
/// difference form, independently of the matrix assembly.
std::vector<double> operator_apply(const ProblemSpec& problem, const Grid& grid,
                                   std::span<const double> values, Scheme scheme,
                                   bool one_sided_drift = false,
                                   Execution exec = Execution::Parallel);

} // namespace levyexit
