#include "romanoff/sieve.hpp"

#include <benchmark/benchmark.h>

using namespace romanoff;

static void BM_PrimeCount(benchmark::State& state) {
    const u64 x = static_cast<u64>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(prime_count(x));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(x));
}
BENCHMARK(BM_PrimeCount)->RangeMultiplier(10)->Range(100'000, 100'000'000)->Unit(benchmark::kMillisecond);

static void BM_PrimeCountSegment(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(prime_count(10'000'000, static_cast<u64>(state.range(0))));
}
BENCHMARK(BM_PrimeCountSegment)->RangeMultiplier(4)->Range(1 << 12, 1 << 22)->Unit(benchmark::kMillisecond);

static void BM_PrimePairs(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(prime_pairs_count(static_cast<u64>(state.range(0)), 2));
}
BENCHMARK(BM_PrimePairs)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);
