#pragma once

#include "levyexit/assembly.hpp"
#include "levyexit/grid.hpp"
#include "levyexit/linsolve.hpp"
#include "levyexit/problem.hpp"

#include <vector>

namespace levyexit {

struct SolverStats {
    SolveMethod method = SolveMethod::LU;
    int iterations = 0;
    /// ||M x - r||_inf / (||M||_inf ||x||_inf + ||r||_inf)
    double residual = 0.0;
};

/// Nodal solution on the full grid, boundary nodes included.
struct SolutionProfile {
    Grid grid;
    std::vector<double> values;
    ProblemSpec problem;
    Scheme scheme = Scheme::Corrected;
    SolverStats solver_stats;
    bool one_sided = false;
};

/// Assembles and solves any problem kind. EscapeLeft is solved as the
/// reflected EscapeRight problem and mapped back node by node.
SolutionProfile solve_on_grid(const ProblemSpec& problem, const Grid& grid, Scheme scheme,
                              const SolveOptions& opts, bool one_sided_drift,
                              Execution exec = Execution::Parallel);

} // namespace levyexit
