#include "levyexit/grid.hpp"

#include "levyexit/dense_matrix.hpp"
#include "levyexit/error.hpp"

#include <cmath>
#include <string>

namespace levyexit {

Grid build_grid(Interval domain, std::size_t n_cells) {
    if (n_cells < 4 || n_cells % 2 != 0) {
        throw Error(ErrorCode::InvalidGrid,
                    "n_cells must be even and at least 4, got " + std::to_string(n_cells));
    }
    if (!(domain.a < domain.b)) {
        throw Error(ErrorCode::InvalidDomain, "grid domain must satisfy a < b");
    }
    Grid g;
    g.a = domain.a;
    g.b = domain.b;
    g.n_cells = n_cells;
    g.h = (domain.b - domain.a) / static_cast<double>(n_cells);
    g.nodes.resize(n_cells + 1);
    for (std::size_t j = 0; j < n_cells; ++j) {
        g.nodes[j] = std::fma(static_cast<double>(j), g.h, domain.a);
    }
    g.nodes[n_cells] = domain.b;
    return g;
}

std::size_t cells_for_resolution(Interval domain, int cells_per_unit) {
    if (cells_per_unit <= 0) {
        throw Error(ErrorCode::InvalidGrid, "resolution J must be positive");
    }
    const double exact = (domain.b - domain.a) * cells_per_unit;
    const double rounded = std::round(exact);
    if (std::abs(exact - rounded) > 1e-9 * std::max(1.0, exact)) {
        throw Error(ErrorCode::InvalidGrid, "domain length times J = " + std::to_string(exact) +
                                                " is not an integer number of cells");
    }
    const auto n = static_cast<std::size_t>(rounded);
    if (n < 4 || n % 2 != 0) {
        throw Error(ErrorCode::InvalidGrid,
                    "resolution J gives " + std::to_string(n) + " cells; need an even count >= 4");
    }
    return n;
}

std::size_t node_index(const Grid& grid, double x) {
    const double pos = (x - grid.a) / grid.h;
    const double rounded = std::round(pos);
    if (rounded < 0.0 || rounded > static_cast<double>(grid.n_cells) ||
        std::abs(pos - rounded) > 1e-9) {
        throw Error(ErrorCode::NonNodeProbe,
                    "probe point " + std::to_string(x) + " is not a grid node");
    }
    return static_cast<std::size_t>(rounded);
}

std::vector<double> multiply(const DenseMatrix& m, std::span<const double> x) {
    std::vector<double> y(m.rows(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto r = m.row(i);
        double acc = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            acc += r[j] * x[j];
        }
        y[i] = acc;
    }
    return y;
}

double norm_inf(const DenseMatrix& m) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (double v : m.row(i)) {
            s += std::abs(v);
        }
        best = std::max(best, s);
    }
    return best;
}

double norm_inf(std::span<const double> v) {
    double best = 0.0;
    for (double x : v) {
        best = std::max(best, std::abs(x));
    }
    return best;
}

} // namespace levyexit
