#include <benchmark/benchmark.h>

#include "qdom/enumerate.hpp"
#include "qdom/random_graphs.hpp"

using namespace qdom;

static void BM_CanonicalForm(benchmark::State& state) {
  Rng rng(3);
  const Graph g = random_connected_graph(rng, static_cast<int>(state.range(0)), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(6)->Arg(8)->Arg(11);

static void BM_CanonicalFormCycle(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormCycle)->Arg(7)->Arg(11);

// Results are cached per order after the first call, so this measures a cold
// run only on the first iteration.
static void BM_EnumerateConnected(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_connected(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_EnumerateConnected)->Arg(6)->Arg(7)->Iterations(1);
