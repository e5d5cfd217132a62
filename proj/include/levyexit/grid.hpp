#pragma once

#include "levyexit/problem.hpp"

#include <cstddef>
#include <vector>

namespace levyexit {

/// Uniform nodes x_j = a + j h, j = 0..n_cells, with x_0 = a and x_N = b exactly.
struct Grid {
    double a = 0.0;
    double b = 0.0;
    std::size_t n_cells = 0;
    double h = 0.0;
    std::vector<double> nodes;

    std::size_t n_interior() const { return n_cells - 1; }
};

/// Requires n_cells even and >= 4 (ErrorCode::InvalidGrid otherwise).
Grid build_grid(Interval domain, std::size_t n_cells);

/// Number of cells giving spacing 1/cells_per_unit on the domain. The
/// resolution J is cells per unit length. Throws InvalidGrid unless the
/// result is an even integer >= 4.
std::size_t cells_for_resolution(Interval domain, int cells_per_unit);

/// Index of the node at x, or throws ErrorCode::NonNodeProbe.
std::size_t node_index(const Grid& grid, double x);

} // namespace levyexit
