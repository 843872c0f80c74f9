#include <cmath>

#include <benchmark/benchmark.h>

#include "gbf/asymptotics.hpp"
#include "gbf/measures.hpp"
#include "gbf/quadrature.hpp"

static void BM_FiniteSingular(benchmark::State& state) {
    for (auto _ : state) {
        auto r = gbf::quad::integrate_finite(
            [](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0, 1e-10);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_FiniteSingular);

static void BM_SemiInfinite(benchmark::State& state) {
    for (auto _ : state) {
        auto r = gbf::quad::integrate_semi_infinite(
            [](double t) { return std::exp(-t) / std::sqrt(t); }, 0.0, 1e-10);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_SemiInfinite);

static void BM_LomaxCdf(benchmark::State& state) {
    const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(gbf::asym::lomax_cdf(0.5, 10.0, tol));
}
BENCHMARK(BM_LomaxCdf)->Arg(8)->Arg(10)->Arg(12);
