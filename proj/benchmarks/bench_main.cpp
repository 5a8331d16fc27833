#include <benchmark/benchmark.h>

#include "sumgraph/constructions.hpp"
#include "sumgraph/power.hpp"
#include "sumgraph/search.hpp"

using namespace sumgraph;

static void BM_AllPairsDistances(benchmark::State& state) {
    Graph g = circulant(int(state.range(0)), {1, 2, 5});
    for (auto _ : state)
        benchmark::DoNotOptimize(all_pairs_distances(g));
}
BENCHMARK(BM_AllPairsDistances)->Arg(128)->Arg(512)->Arg(2048);

static void BM_PowerGraph(benchmark::State& state) {
    Graph g = circulant(int(state.range(0)), {1, 2, 5});
    for (auto _ : state)
        benchmark::DoNotOptimize(power_graph(g, 3));
}
BENCHMARK(BM_PowerGraph)->Arg(128)->Arg(512)->Arg(1024);

static void BM_EdgeGrowth(benchmark::State& state) {
    Graph g = gdm(7, int(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(edge_growth(g, 4));
}
BENCHMARK(BM_EdgeGrowth)->Arg(8)->Arg(64)->Arg(256);

static void BM_EnumerateCubic(benchmark::State& state) {
    const int n = int(state.range(0));
    for (auto _ : state) {
        long count = 0;
        enumerate_connected_regular(n, 3, false, [&](const Graph&) {
            ++count;
            return true;
        });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateCubic)->Arg(6)->Arg(8);

static void BM_CanonicalCode(benchmark::State& state) {
    Graph g = circulant(int(state.range(0)), {1, 2});
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK(BM_CanonicalCode)->Arg(8)->Arg(10);

static void BM_RandomRegular(benchmark::State& state) {
    uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            random_connected_regular(int(state.range(0)), 3, seed++));
}
BENCHMARK(BM_RandomRegular)->Arg(16)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
