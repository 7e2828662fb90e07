#include <benchmark/benchmark.h>

#include <random>

#include "udgcut/generators.hpp"
#include "udgcut/reduction.hpp"
#include "udgcut/solvers.hpp"

using namespace udgcut;

static void BM_BruteForce(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const Graph g = gen::random_graph(rng, static_cast<std::size_t>(state.range(0)), 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(max_cut_bruteforce(g).size);
}
BENCHMARK(BM_BruteForce)->DenseRange(12, 22, 5);

static void BM_Reduce(benchmark::State& state) {
    const Graph g = state.range(0) == 0 ? gen::complete(5) : gen::petersen();
    for (auto _ : state) benchmark::DoNotOptimize(reduce(g).k);
}
BENCHMARK(BM_Reduce)->Arg(0)->Arg(1);

static void BM_TreewidthDP(benchmark::State& state) {
    const ReductionOutput r = reduce(state.range(0) == 0 ? gen::complete(5) : gen::petersen());
    const TreeDecomposition td = greedy_tree_decomposition(r.result());
    for (auto _ : state) benchmark::DoNotOptimize(max_cut_treewidth_dp(r.result(), td));
}
BENCHMARK(BM_TreewidthDP)->Arg(0)->Arg(1);

static void BM_Decomposition(benchmark::State& state) {
    const ReductionOutput r = reduce(gen::complete(5));
    for (auto _ : state) benchmark::DoNotOptimize(greedy_tree_decomposition(r.result()).width());
}
BENCHMARK(BM_Decomposition);

BENCHMARK_MAIN();
