#include "romanoff/sawtooth.hpp"

#include <benchmark/benchmark.h>

using namespace romanoff;

static void BM_PsiSumDyadic(benchmark::State& state) {
    PsiSumQuery q;
    q.K = static_cast<double>(state.range(0));
    q.Y = RationalExp::make(1, 7);
    q.alpha = RationalExp::make(3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(psi_sum_dyadic(q));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PsiSumDyadic)->RangeMultiplier(8)->Range(256, 1 << 20);

static void BM_PsiSumRange(benchmark::State& state) {
    const auto r = RationalExp::make(3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(psi_sum_range(r, 1009, 0.0, 1, static_cast<u64>(state.range(0))).total);
}
BENCHMARK(BM_PsiSumRange)->Arg(10'000)->Arg(1'000'000);
