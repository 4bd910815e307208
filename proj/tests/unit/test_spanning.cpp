#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qdom/claims.hpp"
#include "qdom/errors.hpp"
#include "qdom/extremal.hpp"
#include "qdom/random_graphs.hpp"
#include "qdom/spanning.hpp"

using namespace qdom;

namespace {

DominatingSet make_set(const std::vector<Vertex>& v) {
  return DominatingSet{to_mask(v), static_cast<int>(v.size()), false};
}

bool is_spanning_subgraph(const Graph& h, const Graph& g) {
  if (h.order() != g.order()) return false;
  for (const Edge& e : h.edges()) {
    if (!g.has_edge(e.u, e.v)) return false;
  }
  return true;
}

}  // namespace

TEST(Extraction, WorkedExample) {
  const Graph g = extraction_example_graph();
  ASSERT_EQ(oracle::domination_number(g), 3);
  ASSERT_EQ(oracle::shortest_odd_cycle_length(g), 5);
  const DominatingSet d = make_set(extraction_example_dominating_set());

  const CycleWitness c = select_cycle(g, d);
  const std::vector<Vertex> cycle{0, 1, 2, 3, 4};
  EXPECT_EQ(c.vertices, cycle);

  const DominatingSubset sub = select_dominating_subset(g, d, c);
  const std::vector<Vertex> d_c{0, 3};
  EXPECT_EQ(sub.d_c, d_c);
  EXPECT_TRUE(sub.s.empty());

  const Extraction x = extract_unicyclic(g, d);
  EXPECT_EQ(x.h.size(), 9);
  EXPECT_TRUE(is_unicyclic(x.h));
  EXPECT_TRUE(is_spanning_subgraph(x.h, g));
  EXPECT_EQ(oracle::domination_number(x.h), 3);
  EXPECT_EQ(girth(x.h)->length(), 5);
  EXPECT_TRUE(oracle::dominates(x.h, d.members));
  EXPECT_TRUE(x.trace.order_bound_holds);
}

TEST(Extraction, CycleSelectionHitsMostDominators) {
  Rng rng(47);
  for (int t = 0; t < 80; ++t) {
    const Graph g = random_connected_nonbipartite(rng, uniform_int(rng, 4, 10), 0.3);
    const DominatingSet d = domination_number(g);
    const CycleWitness c = select_cycle(g, d);
    const int go = oracle::shortest_odd_cycle_length(g);
    ASSERT_EQ(c.length(), go);
    int best = 0;
    for (const auto& cyc : oracle::all_cycles(g)) {
      if (static_cast<int>(cyc.size()) != go) continue;
      int hits = 0;
      for (int v : cyc) hits += d.contains(v);
      best = std::max(best, hits);
    }
    int hits = 0;
    for (Vertex v : c.vertices) hits += d.contains(v);
    EXPECT_EQ(hits, best);
  }
}

TEST(Extraction, TriangleAndCStarsAreFixed) {
  const Extraction k3 = extract_unicyclic(complete_graph(3));
  EXPECT_EQ(k3.h, complete_graph(3));
  for (int l = 0; l <= 4; ++l) {
    const Graph g = construct_c_star({l + 5, 3, l});
    EXPECT_EQ(extract_unicyclic(g).h, g) << l;
  }
}

TEST(Extraction, RandomSweep) {
  Rng rng(53);
  for (int t = 0; t < 300; ++t) {
    const Graph g = random_connected_nonbipartite(rng, uniform_int(rng, 3, 14), 0.25);
    const Extraction x = extract_unicyclic(g);
    EXPECT_TRUE(is_spanning_subgraph(x.h, g));
    EXPECT_TRUE(is_unicyclic(x.h));
    EXPECT_EQ(girth(x.h)->length(), oracle::shortest_odd_cycle_length(g));
    EXPECT_EQ(oracle::domination_number(x.h), oracle::domination_number(g));
    for (const StitchStep& step : x.trace.stitches) EXPECT_LE(step.path.size(), 4U);
  }
}

TEST(Extraction, EveryMinimumSetWorks) {
  const Graph g = extraction_example_graph();
  for (const DominatingSet& d : all_minimum_dominating_sets(g)) {
    const Extraction x = extract_unicyclic(g, d);
    EXPECT_EQ(oracle::domination_number(x.h), 3);
    EXPECT_TRUE(oracle::dominates(x.h, d.members));
  }
}

TEST(Extraction, Errors) {
  EXPECT_THROW(extract_unicyclic(cycle_graph(6)), PreconditionError);
  EXPECT_THROW(extract_unicyclic(empty_graph(3)), PreconditionError);
  const Graph g = extraction_example_graph();
  EXPECT_THROW(extract_unicyclic(g, make_set({0, 3})), PreconditionError);
  EXPECT_THROW(extract_unicyclic(g, make_set({0, 1, 2, 3})), PreconditionError);
}

TEST(Extraction, OrderBoundIsOnlyRecorded) {
  // Triangle with a pendant at every vertex: n = 6 but gamma = 3.
  const Graph corona = Graph::build(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}, {2, 5}});
  const Extraction x = extract_unicyclic(corona);
  EXPECT_FALSE(x.trace.order_bound_holds);
  EXPECT_EQ(x.h, corona);
}
