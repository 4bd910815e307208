#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qdom/claims.hpp"
#include "qdom/domination.hpp"
#include "qdom/errors.hpp"
#include "qdom/extremal.hpp"
#include "qdom/random_graphs.hpp"

using namespace qdom;

TEST(Domination, MatchesBruteForceOnRandomGraphs) {
  Rng rng(21);
  for (int t = 0; t < 300; ++t) {
    const Graph g = random_connected_graph(rng, uniform_int(rng, 1, 14), 0.2);
    const auto want = oracle::minimum_dominating_sets(g);
    const DominatingSet d = domination_number(g);
    EXPECT_EQ(d.size, __builtin_popcount(want.front()));
    EXPECT_EQ(d.members, want.front());
    EXPECT_TRUE(d.minimal_certified);
    EXPECT_TRUE(dominates(g, d.members));
  }
}

TEST(Domination, AllMinimumSetsMatchBruteForce) {
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    const Graph g = random_connected_graph(rng, uniform_int(rng, 1, 11), 0.25);
    const auto want = oracle::minimum_dominating_sets(g);
    const auto got = all_minimum_dominating_sets(g);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i].members, want[i]);
  }
}

TEST(Domination, PathsAndCycles) {
  for (int n = 1; n <= 40; ++n) {
    EXPECT_EQ(domination_number(path_graph(n)).size, (n + 2) / 3) << n;
    if (n >= 3) EXPECT_EQ(domination_number(cycle_graph(n)).size, (n + 2) / 3) << n;
  }
}

TEST(Domination, LargeConnectedInputs) {
  for (int l : {20, 40, 55}) {
    EXPECT_EQ(domination_number(construct_c_star({l + 6, 3, l})).size, (l + 5) / 3);
  }
  EXPECT_EQ(domination_number(cycle_graph(64)).size, 22);
  EXPECT_THROW(domination_number(path_graph(65)), BoundExceeded);
}

TEST(Domination, CrossCheckWithLibraryBruteForce) {
  Rng rng(29);
  for (int t = 0; t < 50; ++t) {
    const Graph g = random_connected_graph(rng, uniform_int(rng, 1, 12), 0.3);
    EXPECT_EQ(brute_force_domination_number(g), oracle::domination_number(g));
  }
}

TEST(DominationMask, RoundTrip) {
  const std::vector<Vertex> v{0, 3, 63};
  EXPECT_EQ(from_mask(to_mask(v)), v);
  const std::vector<Vertex> hit{1};
  EXPECT_TRUE(dominates(path_graph(3), hit));
  EXPECT_FALSE(dominates(path_graph(4), hit));
}

TEST(PendantRespecting, StarAndPath) {
  const auto star = pendant_respecting_min_dominating_set(star_graph(4));
  EXPECT_EQ(star.vertices(), std::vector<Vertex>{0});

  // The solver witness {0, 2} takes a pendant; the exchange swaps it for 1.
  const auto p4 = pendant_respecting_min_dominating_set(path_graph(4));
  const std::vector<Vertex> expected{1, 2};
  EXPECT_EQ(p4.vertices(), expected);
}

TEST(PendantRespecting, CStar) {
  const CStarParams p{7, 3, 2};
  const Graph g = construct_c_star(p);
  const auto d = pendant_respecting_min_dominating_set(g);
  EXPECT_EQ(d.size, gamma_c_star_3(2));
  EXPECT_TRUE(d.contains(c_star_hub(p)));
}

TEST(PendantRespecting, Invariants) {
  Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    const Graph g = random_unicyclic_nonbipartite(rng, uniform_int(rng, 4, 16));
    if (pendant_vertices(g).empty()) continue;
    const auto d = pendant_respecting_min_dominating_set(g);
    EXPECT_TRUE(dominates(g, d.members));
    EXPECT_EQ(d.size, oracle::domination_number(g));
    for (Vertex v : pendant_vertices(g)) EXPECT_FALSE(d.contains(v));
    for (Vertex v : pendant_neighbors(g)) EXPECT_TRUE(d.contains(v));
  }
}

TEST(PendantRespecting, Errors) {
  EXPECT_THROW(pendant_respecting_min_dominating_set(cycle_graph(5)), PreconditionError);
  EXPECT_THROW(pendant_respecting_min_dominating_set(path_graph(2)), PreconditionError);
}

TEST(IndependentDomination, MatchesBruteForce) {
  Rng rng(37);
  for (int t = 0; t < 100; ++t) {
    const Graph g = random_connected_graph(rng, uniform_int(rng, 1, 11), 0.3);
    EXPECT_EQ(independent_domination_number(g), oracle::independent_domination_number(g));
  }
}

TEST(ClawFree, Recognition) {
  EXPECT_FALSE(is_claw_free(star_graph(3)));
  EXPECT_TRUE(is_claw_free(cycle_graph(6)));
  EXPECT_TRUE(is_claw_free(complete_graph(5)));
  // Vertex 0 sees 1, 7 and 8, which are pairwise non-adjacent.
  EXPECT_FALSE(is_claw_free(extraction_example_graph()));
}

TEST(ClawFree, IndependentDominationEqualsGamma) {
  Rng rng(41);
  int seen = 0;
  for (int t = 0; t < 2000 && seen < 60; ++t) {
    const Graph g = random_connected_graph(rng, uniform_int(rng, 3, 11), 0.5);
    if (!is_claw_free(g)) continue;
    ++seen;
    EXPECT_EQ(independent_domination_number(g), domination_number(g).size);
  }
  EXPECT_GT(seen, 10);
}
