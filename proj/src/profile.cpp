#include "levyexit/profile.hpp"

#include "levyexit/error.hpp"

#include <algorithm>

namespace levyexit {

SolutionProfile solve_on_grid(const ProblemSpec& problem, const Grid& grid, Scheme scheme,
                              const SolveOptions& opts, bool one_sided_drift, Execution exec) {
    validate(problem);
    if (problem.kind == ProblemKind::EscapeLeft) {
        const ProblemSpec mirrored = reflect(problem);
        const Grid mirrored_grid = build_grid(mirrored.domain, grid.n_cells);
        SolutionProfile out =
            solve_on_grid(mirrored, mirrored_grid, scheme, opts, one_sided_drift, exec);
        std::reverse(out.values.begin(), out.values.end());
        out.grid = grid;
        out.problem = problem;
        return out;
    }

    const LinearSystem system = problem.kind == ProblemKind::ExitTime
                                    ? assemble_exit_time(problem, grid, scheme, one_sided_drift, exec)
                                    : assemble_escape(problem, grid, scheme, one_sided_drift, exec);
    SolveResult result;
    if (opts.method == SolveMethod::LU) {
        result.x = lu_solve(system, exec);
        result.method = SolveMethod::LU;
    } else {
        result = solve(system, opts);
    }

    SolutionProfile out;
    out.grid = grid;
    out.problem = problem;
    out.scheme = scheme;
    out.one_sided = one_sided_drift;
    out.values.assign(grid.n_cells + 1, 0.0);
    for (std::size_t i = 0; i < result.x.size(); ++i) {
        out.values[system.node_map[i]] = result.x[i];
    }
    if (problem.kind == ProblemKind::EscapeRight) {
        out.values.back() = 1.0;
    }
    out.solver_stats = {result.method, result.iterations, relative_residual(system, result.x)};
    return out;
}

} // namespace levyexit
