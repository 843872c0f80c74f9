#include <benchmark/benchmark.h>

#include "gbf/special_functions.hpp"

using namespace gbf::special;

static void BM_LogGamma(benchmark::State& state) {
    double x = 0.37;
    for (auto _ : state) {
        benchmark::DoNotOptimize(log_gamma(x));
        x += 1e-9;
    }
}
BENCHMARK(BM_LogGamma);

static void BM_RegularizedGammaP(benchmark::State& state) {
    const double y = static_cast<double>(state.range(0));
    double z = 0.8 * y;
    for (auto _ : state) {
        benchmark::DoNotOptimize(regularized_gamma_p(y, z));
        z += 1e-9;
    }
}
BENCHMARK(BM_RegularizedGammaP)->Arg(1)->Arg(10)->Arg(100)->Arg(2000);

static void BM_IncompleteBeta(benchmark::State& state) {
    const double b = static_cast<double>(state.range(0));
    double x = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(incomplete_beta(0.5, b, x));
        x += 1e-12;
    }
}
BENCHMARK(BM_IncompleteBeta)->Arg(4)->Arg(512)->Arg(10000);

static void BM_HurwitzZeta(benchmark::State& state) {
    double a = 0.25;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hurwitz_zeta(-0.5, a));
        a += 1e-9;
    }
}
BENCHMARK(BM_HurwitzZeta);
