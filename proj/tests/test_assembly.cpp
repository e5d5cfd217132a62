#include "levyexit/assembly.hpp"
#include "levyexit/error.hpp"
#include "levyexit/grid.hpp"
#include "levyexit/linsolve.hpp"
#include "levyexit/profile.hpp"
#include "levyexit/special_functions.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace levyexit;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::IoError;
}

ProblemSpec pure_jump(double alpha, Interval domain = {-1.0, 1.0}) {
    ProblemSpec p;
    p.alpha = alpha;
    p.eps = 1.0;
    p.d = 0.0;
    p.drift = drift::Zero{};
    p.domain = domain;
    p.kind = ProblemKind::ExitTime;
    return p;
}

std::vector<double> sample(const Grid& g, double (*f)(double)) {
    std::vector<double> u(g.nodes.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        u[i] = f(g.nodes[i]);
    }
    return u;
}

double parabola(double x) { return 1.0 - x * x; }

double bump(double x) {
    const double s = 1.0 - x * x;
    return std::abs(x) < 1.0 ? s * s * s * s : 0.0;
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

double lhs_alpha1(double x) {
    return -(4.0 + 2.0 * x * std::log((1.0 - x) / (1.0 + x))) / std::numbers::pi;
}

const Scheme kSchemes[] = {Scheme::PunchedHole, Scheme::Corrected, Scheme::PrincipalValue};

} // namespace

TEST_CASE("grid examples") {
    const Grid g = build_grid({-1.0, 1.0}, 4);
    CHECK(g.nodes == std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0});
    CHECK(g.h == 0.5);
    CHECK(build_grid({-1.0, 1.0}, 160).h == doctest::Approx(1.0 / 80.0).epsilon(1e-15));
    CHECK(build_grid({-4.0, 4.0}, 8).nodes ==
          std::vector<double>{-4.0, -3.0, -2.0, -1.0, 0.0, 1.0, 2.0, 3.0, 4.0});
    const Grid odd = build_grid({-1.1, 0.0}, 22);
    CHECK(odd.nodes.front() == -1.1);
    CHECK(odd.nodes.back() == 0.0);
}

TEST_CASE("grid rejects odd or tiny cell counts") {
    CHECK(code_of([] { build_grid({-1.0, 1.0}, 5); }) == ErrorCode::InvalidGrid);
    CHECK(code_of([] { build_grid({-1.0, 1.0}, 2); }) == ErrorCode::InvalidGrid);
    CHECK(code_of([] { cells_for_resolution({-1.0, 1.0}, 0); }) == ErrorCode::InvalidGrid);
    CHECK(cells_for_resolution({-1.0, 1.0}, 80) == 160);
    CHECK(cells_for_resolution({-1.1, 0.0}, 20) == 22);
}

TEST_CASE("node lookup") {
    const Grid g = build_grid({-1.0, 1.0}, 40);
    CHECK(node_index(g, -0.5) == 10);
    CHECK(code_of([&] { node_index(g, -0.51); }) == ErrorCode::NonNodeProbe);
}

TEST_CASE("principal-value operator on constants is the absorption term") {
    for (double alpha : {0.5, 1.0, 1.5}) {
        ProblemSpec p = pure_jump(alpha, {-1.0, 2.0});
        p.d = 0.3;
        p.drift = drift::DoubleWell{};
        const Grid g = build_grid(p.domain, 30);
        const std::vector<double> ones(g.nodes.size(), 1.0);
        const auto r = operator_apply(p, g, ones, Scheme::PrincipalValue);
        const double k = p.eps * c_alpha(alpha) / alpha;
        for (std::size_t j = 1; j < g.n_cells; ++j) {
            const double expect = -k * (std::pow(g.nodes[j] - g.a, -alpha) + std::pow(g.b - g.nodes[j], -alpha));
            CHECK(r[j - 1] == doctest::Approx(expect).epsilon(1e-14));
        }
    }
}

TEST_CASE("every scheme maps constants to the absorption term") {
    const ProblemSpec p = pure_jump(1.3);
    const Grid g = build_grid(p.domain, 24);
    const std::vector<double> ones(g.nodes.size(), 1.0);
    const double k = c_alpha(1.3) / 1.3;
    for (Scheme s : kSchemes) {
        const auto r = operator_apply(p, g, ones, s);
        for (std::size_t j = 1; j < g.n_cells; ++j) {
            const double expect = -k * (std::pow(g.nodes[j] + 1.0, -1.3) + std::pow(1.0 - g.nodes[j], -1.3));
            CHECK(r[j - 1] == doctest::Approx(expect).epsilon(1e-14));
        }
    }
}

TEST_CASE("operator on 1 - x^2 at alpha = 1 matches the closed form") {
    const ProblemSpec p = pure_jump(1.0);
    const Grid g = build_grid(p.domain, 640);
    const auto r = operator_apply(p, g, sample(g, parabola), Scheme::PrincipalValue);
    const double exact = -(4.0 - std::log(3.0)) / std::numbers::pi;
    CHECK(lhs_alpha1(-0.5) == doctest::Approx(exact).epsilon(1e-15));
    CHECK(std::abs(r[node_index(g, -0.5) - 1] - exact) < 1e-4);
}

TEST_CASE("operator at alpha = 0.5 extrapolates to the closed form") {
    const ProblemSpec p = pure_jump(0.5);
    auto at = [&](std::size_t cells) {
        const Grid g = build_grid(p.domain, cells);
        const auto r = operator_apply(p, g, sample(g, parabola), Scheme::Corrected);
        return r[node_index(g, -0.5) - 1];
    };
    const double coarse = at(320);
    const double fine = at(640);
    const double extrapolated = (4.0 * fine - coarse) / 3.0;
    // closed form (high-precision reference)
    CHECK(std::abs(extrapolated - (-0.752252778063675049)) < 1e-4);
}

TEST_CASE("operator is linear and maps zero to zero") {
    ProblemSpec p = pure_jump(0.8);
    p.d = 0.4;
    p.drift = drift::Linear{-1.0};
    const Grid g = build_grid(p.domain, 50);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> u(g.nodes.size()), v(g.nodes.size()), w(g.nodes.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        u[i] = dist(rng);
        v[i] = dist(rng);
        w[i] = u[i] + v[i];
    }
    for (Scheme s : kSchemes) {
        const auto zu = operator_apply(p, g, std::vector<double>(u.size(), 0.0), s);
        CHECK(max_abs(zu) == 0.0);
        const auto ru = operator_apply(p, g, u, s);
        const auto rv = operator_apply(p, g, v, s);
        const auto rw = operator_apply(p, g, w, s);
        const double scale = std::max(max_abs(ru), max_abs(rv));
        for (std::size_t j = 0; j < rw.size(); ++j) {
            CHECK(std::abs(rw[j] - ru[j] - rv[j]) < 1e-12 * scale);
        }
    }
}

TEST_CASE("operator_apply length check") {
    const ProblemSpec p = pure_jump(1.0);
    const Grid g = build_grid(p.domain, 8);
    CHECK(code_of([&] { operator_apply(p, g, std::vector<double>(8, 0.0), Scheme::Corrected); }) ==
          ErrorCode::LengthMismatch);
}

TEST_CASE("assembled matrix reproduces operator_apply") {
    ProblemSpec p = pure_jump(1.2, {-0.5, 1.5});
    p.d = 0.2;
    p.drift = drift::DoubleWell{};
    const Grid g = build_grid(p.domain, 40);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<double> u(g.nodes.size(), 0.0);
    for (std::size_t i = 1; i < g.n_cells; ++i) {
        u[i] = dist(rng);
    }
    for (Scheme s : kSchemes) {
        for (bool one_sided : {false, true}) {
            const LinearSystem sys = assemble_exit_time(p, g, s, one_sided);
            const std::vector<double> interior(u.begin() + 1, u.end() - 1);
            const auto mu = multiply(sys.matrix, interior);
            const auto r = operator_apply(p, g, u, s, one_sided);
            const double scale = norm_inf(sys.matrix) * max_abs(interior);
            for (std::size_t j = 0; j < r.size(); ++j) {
                CHECK(std::abs(mu[j] - r[j]) < 1e-12 * scale);
            }
            CHECK(sys.rhs == std::vector<double>(g.n_cells - 1, -1.0));
        }
    }
}

TEST_CASE("matrix is dense and finite") {
    const ProblemSpec p = pure_jump(0.7);
    const Grid g = build_grid(p.domain, 20);
    const LinearSystem sys = assemble_exit_time(p, g, Scheme::Corrected, false);
    for (std::size_t i = 0; i < sys.order(); ++i) {
        for (std::size_t k = 0; k < sys.order(); ++k) {
            CHECK(std::isfinite(sys.matrix(i, k)));
            CHECK(sys.matrix(i, k) != 0.0);
        }
        CHECK(sys.node_map[i] == i + 1);
    }
}

TEST_CASE("corrected and principal-value schemes give the same solution") {
    SUBCASE("pure jump, alpha = 1.5, J = 80") {
        const ProblemSpec p = pure_jump(1.5);
        const Grid g = build_grid(p.domain, 160);
        const auto c = lu_solve(assemble_exit_time(p, g, Scheme::Corrected, false));
        const auto v = lu_solve(assemble_exit_time(p, g, Scheme::PrincipalValue, false));
        for (std::size_t i = 0; i < c.size(); ++i) {
            CHECK(std::abs(c[i] - v[i]) < 1e-10);
        }
    }
    SUBCASE("mixed problems") {
        const DriftSpec drifts[] = {drift::Zero{}, drift::Linear{-1.0}, drift::DoubleWell{},
                                    drift::Polynomial{{0.2, 0.5, -1.0}}};
        const Interval domains[] = {{-1.0, 1.0}, {-1.1, 0.0}, {-2.0, 2.0}};
        int count = 0;
        for (double alpha : {0.5, 1.0, 1.5}) {
            for (double d : {0.0, 0.5}) {
                for (const auto& f : drifts) {
                    const Interval dom = domains[static_cast<std::size_t>(count++) % 3];
                    ProblemSpec p = pure_jump(alpha, dom);
                    p.d = d;
                    p.eps = 0.7;
                    p.drift = f;
                    const Grid g = build_grid(dom, cells_for_resolution(dom, 20));
                    const SolveOptions lu;
                    for (ProblemKind kind : {ProblemKind::ExitTime, ProblemKind::EscapeRight}) {
                        p.kind = kind;
                        const auto c = solve_on_grid(p, g, Scheme::Corrected, lu, false).values;
                        const auto v = solve_on_grid(p, g, Scheme::PrincipalValue, lu, false).values;
                        const double tol = 1e-10 * (1.0 + max_abs(c));
                        for (std::size_t i = 0; i < c.size(); ++i) {
                            CHECK(std::abs(c[i] - v[i]) < tol);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("reflection symmetry on symmetric domains") {
    for (const DriftSpec& f : {DriftSpec{drift::Zero{}}, DriftSpec{drift::Linear{-1.0}},
                               DriftSpec{drift::DoubleWell{}}}) {
        for (double alpha : {0.5, 1.0, 1.5}) {
            ProblemSpec p = pure_jump(alpha, {-2.0, 2.0});
            p.drift = f;
            p.d = 0.1;
            const Grid g = build_grid(p.domain, 40);
            const LinearSystem sys = assemble_exit_time(p, g, Scheme::Corrected, false);
            const std::size_t m = sys.order();
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t k = 0; k < m; ++k) {
                    CHECK(sys.matrix(i, k) == doctest::Approx(sys.matrix(m - 1 - i, m - 1 - k)).epsilon(1e-13));
                }
            }
            const auto u = solve_on_grid(p, g, Scheme::Corrected, {}, false).values;
            for (std::size_t j = 0; j <= g.n_cells; ++j) {
                CHECK(std::abs(u[j] - u[g.n_cells - j]) < 1e-12);
            }
        }
    }
}

TEST_CASE("maximum principle") {
    for (double alpha : {0.3, 0.5, 1.0, 1.5, 1.9}) {
        for (const DriftSpec& f : {DriftSpec{drift::Zero{}}, DriftSpec{drift::Linear{-1.0}},
                                   DriftSpec{drift::DoubleWell{}}}) {
            ProblemSpec p = pure_jump(alpha, {-1.0, 1.0});
            p.drift = f;
            const Grid g = build_grid(p.domain, 80);
            p.kind = ProblemKind::ExitTime;
            for (double u : solve_on_grid(p, g, Scheme::Corrected, {}, recommend_one_sided(p)).values) {
                CHECK(u >= -1e-10);
            }
            p.kind = ProblemKind::EscapeRight;
            for (double u : solve_on_grid(p, g, Scheme::Corrected, {}, recommend_one_sided(p)).values) {
                CHECK(u >= -1e-10);
                CHECK(u <= 1.0 + 1e-10);
            }
        }
    }
}

TEST_CASE("consistency order on a smooth bump") {
    struct Case {
        double alpha, d, slope, x, exact;
    };
    // generator of (1 - x^2)^4 (zero outside (-1, 1)), eps = 1, high-precision references
    const Case cases[] = {
        {0.5, 0.3, -1.0, -0.5, 1.248344491749652351},
        {1.0, 0.3, -1.0, -0.5, 1.643785973531744560},
        {1.5, 0.3, -1.0, -0.5, 2.556915921607024874},
        {0.5, 0.0, 0.0, 0.25, -0.965287616132291833},
        {1.0, 0.0, 0.0, 0.25, -1.411778015931423827},
        {1.5, 0.0, 0.0, 0.25, -2.279069135967083737},
    };
    for (const auto& c : cases) {
        ProblemSpec p = pure_jump(c.alpha);
        p.d = c.d;
        p.drift = c.slope == 0.0 ? DriftSpec{drift::Zero{}} : DriftSpec{drift::Linear{c.slope}};
        std::vector<double> lx, ly;
        for (int J : {20, 40, 80, 160, 320, 640}) {
            const Grid g = build_grid(p.domain, 2 * static_cast<std::size_t>(J));
            const auto r = operator_apply(p, g, sample(g, bump), Scheme::Corrected);
            lx.push_back(std::log10(J));
            ly.push_back(std::log10(std::abs(r[node_index(g, c.x) - 1] - c.exact)));
        }
        const double mx = (lx[0] + lx[1] + lx[2] + lx[3] + lx[4] + lx[5]) / 6.0;
        const double my = (ly[0] + ly[1] + ly[2] + ly[3] + ly[4] + ly[5]) / 6.0;
        double sxy = 0.0, sxx = 0.0;
        for (int i = 0; i < 6; ++i) {
            sxy += (lx[i] - mx) * (ly[i] - my);
            sxx += (lx[i] - mx) * (lx[i] - mx);
        }
        INFO("alpha = " << c.alpha << " d = " << c.d);
        CHECK(sxy / sxx == doctest::Approx(-2.0).epsilon(0.125));
    }
}

TEST_CASE("one-sided drift stencil is exact on quadratics") {
    ProblemSpec p;
    p.alpha = 1.0;
    p.eps = 0.0;
    p.d = 1.0;
    p.drift = drift::Linear{2.0};
    p.domain = {-1.0, 1.0};
    const Grid g = build_grid(p.domain, 20);
    const auto u = sample(g, parabola);
    const auto r = operator_apply(p, g, u, Scheme::Corrected, true);
    for (std::size_t j = 1; j < g.n_cells; ++j) {
        const double x = g.nodes[j];
        CHECK(r[j - 1] == doctest::Approx(-1.0 + 2.0 * x * (-2.0 * x)).epsilon(1e-12));
    }
}

TEST_CASE("one-sided recommendation") {
    ProblemSpec p = pure_jump(0.5);
    CHECK_FALSE(recommend_one_sided(p));
    p.drift = drift::Linear{-1.0};
    CHECK(recommend_one_sided(p));
    p.d = 0.1;
    CHECK_FALSE(recommend_one_sided(p));
    p.d = 0.0;
    p.alpha = 1.5;
    CHECK_FALSE(recommend_one_sided(p));
}

TEST_CASE("escape probability examples") {
    SUBCASE("Brownian limit is the straight line") {
        ProblemSpec p;
        p.alpha = 2.0;
        p.eps = 0.0;
        p.d = 1.0;
        p.domain = {-1.0, 1.0};
        p.kind = ProblemKind::EscapeRight;
        const Grid g = build_grid(p.domain, 160);
        const auto prof = solve_on_grid(p, g, Scheme::Corrected, {}, false);
        for (std::size_t j = 0; j <= g.n_cells; ++j) {
            CHECK(std::abs(prof.values[j] - (g.nodes[j] + 1.0) / 2.0) < 1e-12);
        }
    }
    SUBCASE("alpha = 1 pure jump") {
        ProblemSpec p = pure_jump(1.0);
        p.kind = ProblemKind::EscapeRight;
        const Grid g = build_grid(p.domain, 320);
        const auto prof = solve_on_grid(p, g, Scheme::Corrected, {}, false);
        CHECK(prof.values.front() == 0.0);
        CHECK(prof.values.back() == 1.0);
        CHECK(std::abs(prof.values[node_index(g, 0.0)] - 0.5) < 1e-12);
        const double exact = (std::asin(0.5) + std::numbers::pi / 2.0) / std::numbers::pi;
        CHECK(std::abs(prof.values[node_index(g, 0.5)] - exact) < 2e-2);
    }
}

TEST_CASE("escape systems move the right exterior to the rhs") {
    ProblemSpec p = pure_jump(1.0);
    p.kind = ProblemKind::EscapeRight;
    const Grid g = build_grid(p.domain, 8);
    const LinearSystem sys = assemble_escape(p, g, Scheme::PrincipalValue, false);
    // A P = 0 with P = 1 on the right exterior: rows of the full operator on
    // the indicator of [b, inf) sum to the rhs
    std::vector<double> step(g.nodes.size(), 0.0);
    step.back() = 1.0;
    const auto r = operator_apply(p, g, step, Scheme::PrincipalValue);
    const double k = c_alpha(1.0);
    for (std::size_t j = 1; j < g.n_cells; ++j) {
        const double exterior = k * std::pow(1.0 - g.nodes[j], -1.0);
        CHECK(sys.rhs[j - 1] == doctest::Approx(-(r[j - 1] + exterior)).epsilon(1e-13));
    }
}

TEST_CASE("escape left is the mirrored escape right") {
    for (double alpha : {0.5, 1.5}) {
        ProblemSpec p = pure_jump(alpha, {-1.1, 0.0});
        p.drift = drift::DoubleWell{};
        p.kind = ProblemKind::EscapeLeft;
        const Grid g = build_grid(p.domain, 44);
        const auto left = solve_on_grid(p, g, Scheme::Corrected, {}, false);
        const ProblemSpec m = reflect(p);
        const auto mirrored = solve_on_grid(m, build_grid(m.domain, 44), Scheme::Corrected, {}, false);
        for (std::size_t j = 0; j <= g.n_cells; ++j) {
            CHECK(std::abs(left.values[j] - mirrored.values[g.n_cells - j]) < 1e-12);
        }
        CHECK(left.values.front() == 1.0);
        CHECK(left.values.back() == 0.0);
        p.kind = ProblemKind::EscapeRight;
        const auto right = solve_on_grid(p, g, Scheme::Corrected, {}, false);
        for (std::size_t j = 0; j <= g.n_cells; ++j) {
            CHECK(std::abs(left.values[j] + right.values[j] - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("serial and parallel assembly are bit-identical") {
    ProblemSpec p = pure_jump(1.3, {-1.0, 1.0});
    p.d = 0.2;
    p.drift = drift::DoubleWell{};
    const Grid g = build_grid(p.domain, 200);
    for (Scheme s : kSchemes) {
        const auto a = assemble_exit_time(p, g, s, true, Execution::Serial);
        const auto b = assemble_exit_time(p, g, s, true, Execution::Parallel);
        CHECK(a.matrix == b.matrix);
        CHECK(a.rhs == b.rhs);
        const auto u = sample(g, parabola);
        CHECK(operator_apply(p, g, u, s, false, Execution::Serial) ==
              operator_apply(p, g, u, s, false, Execution::Parallel));
    }
}

TEST_CASE("assembly errors") {
    ProblemSpec p = pure_jump(1.0);
    const Grid g = build_grid(p.domain, 8);
    CHECK(code_of([&] { assemble_escape(p, g, Scheme::Corrected, false); }) == ErrorCode::WrongProblemKind);
    p.kind = ProblemKind::EscapeRight;
    CHECK(code_of([&] { assemble_exit_time(p, g, Scheme::Corrected, false); }) == ErrorCode::WrongProblemKind);
    p.kind = ProblemKind::ExitTime;
    CHECK(code_of([&] { assemble_exit_time(p, build_grid({-2.0, 2.0}, 8), Scheme::Corrected, false); }) ==
          ErrorCode::DomainMismatch);
    p.eps = 0.0;
    CHECK(code_of([&] { assemble_exit_time(p, g, Scheme::Corrected, false); }) == ErrorCode::DegenerateOperator);
}

TEST_CASE("second-difference coefficient") {
    ProblemSpec p = pure_jump(1.5);
    p.d = 0.4;
    const double h = 0.01;
    CHECK(second_difference_coefficient(p, h, Scheme::PunchedHole) == 0.2);
    const double ch = 0.2 - c_alpha(1.5) * riemann_zeta(0.5) * std::pow(h, 0.5);
    CHECK(second_difference_coefficient(p, h, Scheme::Corrected) == doctest::Approx(ch).epsilon(1e-15));
    CHECK(second_difference_coefficient(p, h, Scheme::PrincipalValue) == doctest::Approx(ch).epsilon(1e-15));
}

TEST_CASE("scheme names") {
    for (Scheme s : kSchemes) {
        CHECK(parse_scheme(to_string(s)) == s);
    }
    CHECK(parse_scheme("nm1d3") == Scheme::PrincipalValue);
    CHECK(code_of([] { parse_scheme("simpson"); }) == ErrorCode::ConfigError);
}
