#include <benchmark/benchmark.h>

#include "tokenlab/tokenlab.hpp"

using namespace tokenlab;

static void BM_DoubleVertexFan(benchmark::State& state) {
  const Graph g = double_vertex(fan(static_cast<int>(state.range(0)))).graph();
  for (auto _ : state)
    benchmark::DoNotOptimize(alpha(g).alpha);
  state.counters["vertices"] = g.order();
}
BENCHMARK(BM_DoubleVertexFan)->DenseRange(4, 12, 4);

static void BM_DoubleVertexWheel(benchmark::State& state) {
  const Graph g = double_vertex(wheel(static_cast<int>(state.range(0)))).graph();
  for (auto _ : state)
    benchmark::DoNotOptimize(alpha(g).alpha);
  state.counters["vertices"] = g.order();
}
BENCHMARK(BM_DoubleVertexWheel)->DenseRange(4, 12, 4);

static void BM_PairCycle(benchmark::State& state) {
  const Graph g = pair_graph(cycle(static_cast<int>(state.range(0)))).graph();
  for (auto _ : state)
    benchmark::DoNotOptimize(alpha(g).alpha);
  state.counters["vertices"] = g.order();
}
BENCHMARK(BM_PairCycle)->DenseRange(4, 16, 4);

static void BM_BruteForceGrid(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  const Graph g = cartesian_product(path(4), path(s));
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_alpha(g, 36).alpha);
}
BENCHMARK(BM_BruteForceGrid)->DenseRange(3, 6, 1);

static void BM_BuildDoubleVertex(benchmark::State& state) {
  const Graph g = wheel(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(double_vertex(g).graph().edge_count());
}
BENCHMARK(BM_BuildDoubleVertex)->Arg(12)->Arg(40);

static void BM_KTokenPath(benchmark::State& state) {
  const Graph g = path(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(k_token(g, 3).graph().edge_count());
}
BENCHMARK(BM_KTokenPath)->Arg(8)->Arg(12);
BENCHMARK_MAIN();
