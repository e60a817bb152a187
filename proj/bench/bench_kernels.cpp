// Serial reference vs OpenMP kernel for each parallel path. Worker count
// follows MTF_WORKERS.

#include <benchmark/benchmark.h>

#include <random>

#include "mtf/constructions.hpp"
#include "mtf/enumeration.hpp"
#include "mtf/linkgraph.hpp"
#include "mtf/structure.hpp"
#include "mtf/sweeps.hpp"

namespace {

using mtf::Execution;

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

void label(benchmark::State& state) {
    state.SetLabel(state.range(0) ? "parallel x" + std::to_string(mtf::worker_count()) : "serial");
}

void BM_MaxCut(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const mtf::Graph g = mtf::random_graph(22, 0.4, rng);
    for (auto _ : state) benchmark::DoNotOptimize(mtf::max_cut(g, mode(state)));
    label(state);
}

void BM_Enumerate(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(mtf::enumerate_mtf_codes(8, mode(state)));
    label(state);
}

void BM_MisBoundSweep(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(mtf::sweep_mis_bound_random(5000, 16, 1, mode(state)));
    label(state);
}

void BM_ExtensionCount(benchmark::State& state) {
    // S empty, A = K_{3,6}: 18 host edges, 2^18 subsets
    const mtf::Graph s(9);
    const mtf::Graph a = mtf::complete_bipartite(3, 6);
    for (auto _ : state) benchmark::DoNotOptimize(mtf::count_maximal_extensions(s, a, mode(state)));
    label(state);
}

void BM_DistinctCompletions(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(mtf::verify_distinct_completions(8, mode(state)));
    label(state);
}

void BM_StructureFraction(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(mtf::structure_fraction(8, mode(state)));
    label(state);
}

}  // namespace

BENCHMARK(BM_MaxCut)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MisBoundSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtensionCount)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistinctCompletions)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StructureFraction)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
