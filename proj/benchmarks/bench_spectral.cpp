#include <benchmark/benchmark.h>

#include "qdom/extremal.hpp"
#include "qdom/random_graphs.hpp"
#include "qdom/spectral.hpp"

using namespace qdom;

static void BM_LeastEigenpairCStar(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = construct_c_star({n, 3, n / 2});
  for (auto _ : state) benchmark::DoNotOptimize(least_q_eigenpair(g));
}
BENCHMARK(BM_LeastEigenpairCStar)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_LeastEigenpairRandom(benchmark::State& state) {
  Rng rng(1);
  const Graph g = random_connected_graph(rng, static_cast<int>(state.range(0)), 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(least_q_eigenpair(g));
}
BENCHMARK(BM_LeastEigenpairRandom)->Arg(16)->Arg(64);
