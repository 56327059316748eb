#include <benchmark/benchmark.h>

#include "korenblum/horowitz.hpp"
#include "korenblum/lacunary.hpp"

using namespace korenblum;

static void BM_LacunaryEval(benchmark::State& state)
{
    const LacunaryParams params(4);
    const RadialPoint p = RadialPoint::from_scale(double(state.range(0)), AngleFraction(3, 11));
    for (auto _ : state)
        benchmark::DoNotOptimize(lacunary_eval(p, params, 1e-9));
}
BENCHMARK(BM_LacunaryEval)->Arg(8)->Arg(64)->Arg(1024)->Arg(4096);

static void BM_HorowitzEval(benchmark::State& state)
{
    const HorowitzParams params(8, 4);
    const RadialPoint p = RadialPoint::from_scale(double(state.range(0)), AngleFraction(5, 13));
    for (auto _ : state)
        benchmark::DoNotOptimize(horowitz_eval(p, params, 1e-9).log_modulus);
}
BENCHMARK(BM_HorowitzEval)->Arg(8)->Arg(64)->Arg(256);

static void BM_TimesPow2(benchmark::State& state)
{
    const AngleFraction x(BigInt(1), BigInt("1000000000000000000000007"));
    const BigInt e = BigInt(1) << state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(x.times_pow2(e));
}
BENCHMARK(BM_TimesPow2)->Arg(16)->Arg(256)->Arg(4096);
