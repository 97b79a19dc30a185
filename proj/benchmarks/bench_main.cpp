#include <benchmark/benchmark.h>

#include "barber/barber.hpp"

using namespace barber;

namespace {

struct GhzCounts {
    OutcomeCounts standard;
    OutcomeCounts inverted;
};

const GhzCounts& ghz_counts(int n) {
    static std::map<int, GhzCounts> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        const PipelineResult r = barber_pipeline(gen_ghz(n), default_profile(n), 100000, 77);
        it = cache.emplace(n, GhzCounts{r.std_counts, relabel_inverted(r.inv_counts)}).first;
    }
    return it->second;
}

void BM_SelectiveMerge(benchmark::State& state) {
    const GhzCounts& f = ghz_counts(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(selective_merge_normalize(f.standard, f.inverted, {}));
}

void BM_DenseMerge(benchmark::State& state) {
    const GhzCounts& f = ghz_counts(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(merge_normalize_dense(f.standard, f.inverted));
}

void BM_Trajectories(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Circuit c = gen_ghz(n);
    const DeviceProfile p = default_profile(n);
    for (auto _ : state) benchmark::DoNotOptimize(run_trajectories(c, p, 10000, 5));
    state.SetItemsProcessed(state.iterations() * 10000);
}

void BM_RunExact(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Circuit c = gen_ghz(n);
    const DeviceProfile p = default_profile(n);
    for (auto _ : state) benchmark::DoNotOptimize(run_exact(c, p));
}

}  // namespace

BENCHMARK(BM_SelectiveMerge)->DenseRange(12, 20, 4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_DenseMerge)->DenseRange(12, 20, 4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Trajectories)->Arg(6)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunExact)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
