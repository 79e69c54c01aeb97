// Serial reference vs OpenMP kernels.

#include "gpc/montecarlo.hpp"
#include "gpc/volume.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

namespace {

using gpc::ClassTag;

void BM_mc_serial(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gpc::mc_volume_serial(d, d + 1, ClassTag::cp, 1u << 20, 42));
    state.SetItemsProcessed(state.iterations() * (1 << 20));
}

void BM_mc_parallel(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gpc::mc_volume(d, d + 1, ClassTag::cp, 1u << 20, 42));
    state.SetItemsProcessed(state.iterations() * (1 << 20));
    state.counters["threads"] = omp_get_max_threads();
}

void BM_chains_serial(benchmark::State& state) {
    const auto set = gpc::chambers_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), ClassTag::cp);
    for (auto _ : state) benchmark::DoNotOptimize(gpc::volume_of(set, gpc::Execution::serial));
}

void BM_chains_parallel(benchmark::State& state) {
    const auto set = gpc::chambers_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), ClassTag::cp);
    for (auto _ : state) benchmark::DoNotOptimize(gpc::volume_of(set, gpc::Execution::parallel));
    state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_mc_serial)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mc_parallel)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_chains_serial)->Args({5, 6})->Args({7, 8})->Args({6, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_chains_parallel)->Args({5, 6})->Args({7, 8})->Args({6, 3})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
