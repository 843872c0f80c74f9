#include <cmath>

#include <benchmark/benchmark.h>

#include "gbf/glambda.hpp"
#include "gbf/inequalities.hpp"
#include "gbf/smoothing.hpp"

static void BM_Smooth(benchmark::State& state) {
    const double y = static_cast<double>(state.range(0));
    for (auto _ : state) {
        double v = gbf::smoothing::smooth([](double t) { return -std::expm1(-t); }, y,
                                          1.0, 1e-10);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_Smooth)->Arg(1)->Arg(100)->Arg(2000);

static void BM_MarginSweepI(benchmark::State& state) {
    gbf::ineq::GridSpec grid;
    grid.lambda_values = {0.5};
    const int n = static_cast<int>(state.range(0));
    grid.x_grid = {0.01, 100.0, n, gbf::ineq::GridAxis::Spacing::log};
    grid.y_grid = grid.x_grid;
    for (auto _ : state) {
        auto report = gbf::ineq::sweep(gbf::ineq::Which::I, grid, {});
        benchmark::DoNotOptimize(report.min_margin);
    }
}
BENCHMARK(BM_MarginSweepI)->Arg(10)->Arg(20);

static void BM_SnPartial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(gbf::glambda::s_n_partial(1, 0.25, 0.5, n));
}
BENCHMARK(BM_SnPartial)->Arg(10000)->Arg(100000);
