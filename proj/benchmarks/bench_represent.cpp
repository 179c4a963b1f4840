#include "romanoff/represent.hpp"

#include <benchmark/benchmark.h>

using namespace romanoff;

namespace {

void density(benchmark::State& state, const char* r) {
    const auto spec = ExponentSpec::parse(r);
    const u64 x = static_cast<u64>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(density_report(spec, x).representable);
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(x));
}

}  // namespace

BENCHMARK_CAPTURE(density, romanoff, "1")->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(density, squares, "2,2")->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(density, cubes, "3,3")->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

static void BM_FindWitness(benchmark::State& state) {
    const auto spec = ExponentSpec::parse("1");
    u64 n = 1'000'001;
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_witness(n, spec));
        n = n >= 2'000'000 ? 1'000'001 : n + 2;
    }
}
BENCHMARK(BM_FindWitness);
