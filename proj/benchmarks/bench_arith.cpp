#include "romanoff/arith.hpp"

#include <benchmark/benchmark.h>

using namespace romanoff;

// Odd moduli in a sliding window so the factor table stays warm.
static void BM_MultOrder2(benchmark::State& state) {
    const u64 base = static_cast<u64>(state.range(0)) | 1;
    u64 d = base;
    benchmark::DoNotOptimize(mult_order2(3));  // builds the factor table
    for (auto _ : state) {
        benchmark::DoNotOptimize(mult_order2(d));
        d = d > base + 20'000 ? base : d + 2;
    }
}
BENCHMARK(BM_MultOrder2)->Arg(1'001)->Arg(1'000'001)->Arg(1'000'000'000'001);

static void BM_IsPrime(benchmark::State& state) {
    u64 n = (u64{1} << 61) - 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_prime_u64(n));
        n -= 2;
    }
}
BENCHMARK(BM_IsPrime);
