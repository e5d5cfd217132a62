#include "levyexit/assembly.hpp"
#include "levyexit/linsolve.hpp"
#include "levyexit/monte_carlo.hpp"

#include <benchmark/benchmark.h>

using namespace levyexit;

namespace {

ProblemSpec bench_problem() {
    ProblemSpec p;
    p.alpha = 1.5;
    p.eps = 1.0;
    p.d = 0.1;
    p.drift = drift::DoubleWell{};
    p.domain = {-1.0, 1.0};
    return p;
}

Execution exec_of(const benchmark::State& state) {
    return state.range(1) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_Assemble(benchmark::State& state) {
    const ProblemSpec p = bench_problem();
    const Grid g = build_grid(p.domain, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(assemble_exit_time(p, g, Scheme::Corrected, false, exec_of(state)));
    }
}

void BM_OperatorApply(benchmark::State& state) {
    const ProblemSpec p = bench_problem();
    const Grid g = build_grid(p.domain, static_cast<std::size_t>(state.range(0)));
    std::vector<double> u(g.nodes.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        u[i] = 1.0 - g.nodes[i] * g.nodes[i];
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(operator_apply(p, g, u, Scheme::Corrected, false, exec_of(state)));
    }
}

void BM_LuSolve(benchmark::State& state) {
    const ProblemSpec p = bench_problem();
    const Grid g = build_grid(p.domain, static_cast<std::size_t>(state.range(0)));
    const LinearSystem sys = assemble_exit_time(p, g, Scheme::Corrected, false);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lu_solve(sys, exec_of(state)));
    }
}

void BM_MonteCarlo(benchmark::State& state) {
    ProblemSpec p = bench_problem();
    p.alpha = 1.0;
    p.d = 0.0;
    p.drift = drift::Zero{};
    MCOptions opts;
    opts.exec = exec_of(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc_exit_time(p, 0.0, 1e-3, state.range(0), 1, opts));
    }
}

} // namespace

BENCHMARK(BM_Assemble)->ArgsProduct({{160, 640}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OperatorApply)->ArgsProduct({{160, 640}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LuSolve)->ArgsProduct({{160, 640}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarlo)->ArgsProduct({{2000}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
