#include <benchmark/benchmark.h>

#include "qdom/domination.hpp"
#include "qdom/random_graphs.hpp"

using namespace qdom;

static void BM_DominationPath(benchmark::State& state) {
  const Graph g = path_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(domination_number(g));
}
BENCHMARK(BM_DominationPath)->Arg(16)->Arg(32)->Arg(48);

static void BM_DominationRandom(benchmark::State& state) {
  Rng rng(2);
  const Graph g = random_connected_graph(rng, static_cast<int>(state.range(0)), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(domination_number(g));
}
BENCHMARK(BM_DominationRandom)->Arg(20)->Arg(40);
