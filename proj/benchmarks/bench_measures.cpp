#include <benchmark/benchmark.h>

#include <cmath>

#include "korenblum/arc_measure.hpp"
#include "korenblum/cantor.hpp"

using namespace korenblum;

static void BM_PoissonIntegralMuK(benchmark::State& state)
{
    const ArcMeasure mu = build_mu_k(int(state.range(0)));
    const RadialPoint p = RadialPoint::from_scale(24, AngleFraction(1, 8));
    for (auto _ : state)
        benchmark::DoNotOptimize(mu.poisson_integral(p, 1e-4));
}
BENCHMARK(BM_PoissonIntegralMuK)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_OptimalCoverCost(benchmark::State& state)
{
    const auto spec = CantorSpec::middle_thirds(int(state.range(0)));
    const Generation gen = generation(spec, spec.depth());
    const auto gauge = GaugeFunction::power(std::log(2.0) / std::log(3.0));
    for (auto _ : state)
        benchmark::DoNotOptimize(optimal_cover_cost(gen, gauge));
}
BENCHMARK(BM_OptimalCoverCost)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_CountTimesGauge(benchmark::State& state)
{
    const auto spec = CantorSpec::trigonometric(32, 4);
    const auto gauge = GaugeFunction::log_scale(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_times_gauge(spec, gauge, 4));
}
BENCHMARK(BM_CountTimesGauge);
