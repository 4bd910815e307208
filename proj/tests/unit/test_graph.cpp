#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qdom/errors.hpp"
#include "qdom/graph.hpp"
#include "qdom/random_graphs.hpp"

using namespace qdom;

TEST(GraphBuild, RejectsMalformedInput) {
  EXPECT_THROW(Graph::build(0, {}), GraphError);
  EXPECT_THROW(Graph::build(3, {{0, 0}}), GraphError);
  EXPECT_THROW(Graph::build(3, {{0, 3}}), GraphError);
  EXPECT_THROW(Graph::build(3, {{0, 1}, {1, 0}}), GraphError);
  EXPECT_THROW(Graph::build(3, {{-1, 1}}), GraphError);
}

TEST(GraphBuild, NormalizesAndSortsEdges) {
  const Graph g = Graph::build(4, {{3, 1}, {2, 0}, {1, 0}});
  const std::vector<Edge> expected{{0, 1}, {0, 2}, {1, 3}};
  EXPECT_EQ(g.edges(), expected);
  EXPECT_EQ(g.size(), 3);
  EXPECT_EQ(g.degree(0), 2);
  EXPECT_TRUE(g.has_edge(3, 1));
  EXPECT_FALSE(g.has_edge(2, 3));
  EXPECT_EQ(g.max_degree(), 2);
}

TEST(GraphBuild, NeighborhoodMasks) {
  const Graph g = path_graph(3);
  EXPECT_EQ(g.closed_neighborhood(1), 0b111U);
  EXPECT_EQ(g.open_neighborhood(0), 0b010U);
  EXPECT_THROW(path_graph(65).closed_neighborhood(0), BoundExceeded);
}

TEST(Structure, Connectivity) {
  EXPECT_TRUE(is_connected(empty_graph(1)));
  EXPECT_FALSE(is_connected(empty_graph(2)));
  EXPECT_TRUE(is_connected(cycle_graph(5)));
}

TEST(Structure, BipartitionWitnesses) {
  const auto even = bipartition(cycle_graph(6));
  ASSERT_TRUE(even.bipartite);
  for (const Edge& e : cycle_graph(6).edges()) EXPECT_NE(even.side[e.u], even.side[e.v]);

  const Graph c5 = cycle_graph(5);
  const auto odd = bipartition(c5);
  ASSERT_FALSE(odd.bipartite);
  ASSERT_EQ(odd.odd_walk.size() % 2, 1U);
  for (std::size_t i = 0; i < odd.odd_walk.size(); ++i) {
    EXPECT_TRUE(c5.has_edge(odd.odd_walk[i], odd.odd_walk[(i + 1) % odd.odd_walk.size()]));
  }
}

TEST(Structure, GirthsOnSmallFamilies) {
  EXPECT_FALSE(odd_girth(cycle_graph(4)).has_value());
  EXPECT_EQ(odd_girth(complete_graph(4))->length(), 3);
  EXPECT_EQ(girth(cycle_graph(7))->length(), 7);
  EXPECT_FALSE(girth(path_graph(5)).has_value());
}

TEST(Structure, ShortestOddCyclesMatchBruteForce) {
  Rng rng(7);
  for (int t = 0; t < 60; ++t) {
    const Graph g = random_connected_nonbipartite(rng, uniform_int(rng, 3, 9), 0.3);
    const int go = oracle::shortest_odd_cycle_length(g);
    ASSERT_EQ(odd_girth(g)->length(), go);
    std::vector<std::vector<int>> expected;
    for (const auto& c : oracle::all_cycles(g)) {
      if (static_cast<int>(c.size()) == go) expected.push_back(c);
    }
    std::vector<std::vector<int>> got;
    for (const auto& c : shortest_odd_cycles(g)) {
      EXPECT_TRUE(validates(g, c));
      got.push_back(c.vertices);
    }
    EXPECT_EQ(got, expected);
  }
}

TEST(Structure, GirthMatchesBruteForce) {
  Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    const Graph g = random_connected_graph(rng, uniform_int(rng, 3, 9), 0.25);
    const auto cycles = oracle::all_cycles(g);
    const auto got = girth(g);
    if (cycles.empty()) {
      EXPECT_FALSE(got.has_value());
      continue;
    }
    std::size_t shortest = cycles.front().size();
    for (const auto& c : cycles) shortest = std::min(shortest, c.size());
    ASSERT_TRUE(got.has_value());
    EXPECT_EQ(static_cast<std::size_t>(got->length()), shortest);
    EXPECT_TRUE(validates(g, *got));
  }
}

TEST(Structure, ShortestOddCyclesRejectsBipartite) {
  EXPECT_THROW(shortest_odd_cycles(cycle_graph(4)), PreconditionError);
}

TEST(Structure, CanonicalCycle) {
  const CycleWitness c = canonical_cycle({{4, 2, 0, 3}});
  const std::vector<Vertex> expected{0, 2, 4, 3};
  EXPECT_EQ(c.vertices, expected);
}

TEST(Structure, DistancesAndPendants) {
  const Graph g = Graph::build(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
  const std::vector<Vertex> src{0};
  const std::vector<int> expected{0, 1, 1, 2, 3};
  EXPECT_EQ(distances_from(g, src), expected);
  const std::vector<Vertex> a{0, 1}, b{4};
  EXPECT_EQ(subgraph_distance(g, a, b), 3);
  EXPECT_EQ(pendant_vertices(g), std::vector<Vertex>{4});
  EXPECT_EQ(pendant_neighbors(g), std::vector<Vertex>{3});
  EXPECT_TRUE(is_unicyclic(g));
  EXPECT_FALSE(is_tree(g));
  EXPECT_TRUE(is_tree(path_graph(4)));
}

TEST(Surgery, CoalesceKeepsFirstLabels) {
  const Graph g = coalesce(cycle_graph(3), 0, path_graph(3), 0);
  EXPECT_EQ(g.order(), 5);
  EXPECT_TRUE(g.has_edge(0, 3));
  EXPECT_TRUE(g.has_edge(3, 4));
  EXPECT_TRUE(is_unicyclic(g));
}

TEST(Surgery, EdgeEdits) {
  const Graph c4 = cycle_graph(4);
  const std::vector<Edge> del{{0, 1}};
  const Graph p4 = delete_edges(c4, del);
  EXPECT_EQ(p4.size(), 3);
  EXPECT_THROW(delete_edges(p4, del), GraphError);
  EXPECT_EQ(add_edges(p4, del), c4);
  const std::vector<Edge> present{{1, 2}};
  EXPECT_THROW(add_edges(p4, present), GraphError);
}

TEST(Surgery, InducedAndRelabel) {
  const Graph k4 = complete_graph(4);
  const std::vector<Vertex> keep{1, 3};
  EXPECT_EQ(induced_subgraph(k4, keep).size(), 1);
  const Graph p = path_graph(3);
  const std::vector<Vertex> perm{2, 0, 1};
  const Graph r = relabel(p, perm);
  EXPECT_TRUE(r.has_edge(2, 0));
  EXPECT_TRUE(r.has_edge(0, 1));
}

TEST(Families, Shapes) {
  EXPECT_EQ(star_graph(4).degree(0), 4);
  EXPECT_EQ(complete_graph(5).size(), 10);
  EXPECT_EQ(cycle_graph(5).size(), 5);
  EXPECT_EQ(empty_graph(3).size(), 0);
}
