#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qdom/errors.hpp"
#include "qdom/extremal.hpp"
#include "qdom/random_graphs.hpp"

using namespace qdom;

TEST(CStar, Labels) {
  const CStarParams p{8, 3, 2};
  const Graph g = construct_c_star(p);
  EXPECT_EQ(g.order(), 8);
  EXPECT_EQ(g.size(), 8);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_TRUE(g.has_edge(0, 3));
  EXPECT_TRUE(g.has_edge(3, 4));
  for (Vertex v : {5, 6, 7}) EXPECT_TRUE(g.has_edge(4, v));
  EXPECT_EQ(c_star_hub(p), 4);
  EXPECT_EQ(c_star_hub({5, 3, 0}), 0);
  EXPECT_EQ(p.pendants(), 3);
  EXPECT_EQ(describe(p), "C*_{3,2} (n=8)");
}

TEST(CStar, Validation) {
  EXPECT_FALSE((CStarParams{5, 4, 0}.valid()));
  EXPECT_FALSE((CStarParams{5, 5, 0}.valid()));
  EXPECT_FALSE((CStarParams{5, 3, -1}.valid()));
  EXPECT_FALSE((CStarParams{5, 1, 0}.valid()));
  EXPECT_TRUE((CStarParams{4, 3, 0}.valid()));
  EXPECT_THROW(construct_c_star({5, 5, 0}), std::invalid_argument);
}

TEST(CStar, GammaFormulaAgainstBruteForce) {
  for (int n = 4; n <= 18; ++n) {
    for (int l = 0; l <= n - 4; ++l) {
      const Graph g = construct_c_star({n, 3, l});
      EXPECT_EQ(gamma_c_star_3(l), oracle::domination_number(g)) << n << " " << l;
    }
  }
}

TEST(CStar, RecognitionRoundTrip) {
  for (int s : {3, 5, 7}) {
    for (int n = s + 1; n <= 14; ++n) {
      for (int l = 0; l <= n - s - 1; ++l) {
        const CStarParams p{n, s, l};
        const Graph g = construct_c_star(p);
        EXPECT_EQ(recognize_c_star(g), p);
        Rng rng(n * 100 + l);
        const Graph shuffled = relabel(g, random_permutation(rng, n));
        EXPECT_EQ(recognize_c_star(shuffled), p);
      }
    }
  }
  EXPECT_FALSE(recognize_c_star(cycle_graph(5)).has_value());
  EXPECT_FALSE(recognize_c_star(path_graph(5)).has_value());
  const Graph two_hubs = Graph::build(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}});
  EXPECT_FALSE(recognize_c_star(two_hubs).has_value());
}

TEST(CycleTrees, Shapes) {
  const RootedTree edge{2, {Edge(0, 1)}, 0};
  const RootedTree path3{3, {Edge(0, 1), Edge(1, 2)}, 1};
  const Graph g = construct_cycle_trees(5, {{1, edge}, {3, path3}});
  EXPECT_EQ(g.order(), 8);
  EXPECT_TRUE(is_unicyclic(g));
  EXPECT_TRUE(g.has_edge(0, 5));
  // path3 rooted at its middle: both ends hang on cycle vertex 2.
  EXPECT_TRUE(g.has_edge(2, 6));
  EXPECT_TRUE(g.has_edge(2, 7));
  EXPECT_EQ(odd_girth(g)->length(), 5);
}

TEST(CycleTrees, Errors) {
  const RootedTree edge{2, {Edge(0, 1)}, 0};
  EXPECT_THROW(construct_cycle_trees(4, {{1, edge}}), std::invalid_argument);
  EXPECT_THROW(construct_cycle_trees(1, {{1, edge}}), std::invalid_argument);
  EXPECT_THROW(construct_cycle_trees(3, {{0, edge}}), std::invalid_argument);
  EXPECT_THROW(construct_cycle_trees(3, {{4, edge}}), std::invalid_argument);
  const RootedTree trivial{1, {}, 0};
  EXPECT_THROW(construct_cycle_trees(3, {{1, trivial}}), std::invalid_argument);
  const RootedTree cyclic{3, {Edge(0, 1), Edge(1, 2), Edge(0, 2)}, 0};
  EXPECT_THROW(construct_cycle_trees(3, {{1, cyclic}}), std::invalid_argument);
}

TEST(GammaChecks, MonotoneInL) {
  for (int s : {3, 5}) {
    for (int n = s + 2; n <= 16; ++n) EXPECT_TRUE(gamma_monotone_in_l_check(s, n).passed());
  }
}

TEST(GammaChecks, CycleShrink) {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 2 * k + 2; n <= 16; ++n) {
      for (int l = 0; l <= n - 2 * k - 2; ++l) {
        EXPECT_TRUE(gamma_cycle_shrink_check(k, l, n).passed()) << k << " " << l << " " << n;
      }
    }
  }
}

TEST(Reduction, AlreadyCStar) {
  const Graph g = construct_c_star({8, 3, 2});
  const Reduction r = reduce_to_cstar(g);
  EXPECT_EQ(r.result, g);
  EXPECT_EQ(r.params, (CStarParams{8, 3, 2}));
  EXPECT_TRUE(r.moves.empty());
  EXPECT_TRUE(r.equal_gamma);
}

TEST(Reduction, TwoPendantNeighborsOnTriangle) {
  const Graph g = Graph::build(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}});
  const Reduction r = reduce_to_cstar(g);
  EXPECT_EQ(r.params, (CStarParams{5, 3, 0}));
  ASSERT_EQ(r.moves.size(), 1U);
  EXPECT_EQ(r.moves[0].from, 1);
  EXPECT_EQ(r.moves[0].to, 0);
  EXPECT_EQ(r.gamma_input, 2);
  EXPECT_EQ(r.gamma_result, 1);
  EXPECT_FALSE(r.equal_gamma);
}

TEST(Reduction, BareCycle) {
  const Reduction r = reduce_to_cstar(cycle_graph(7));
  EXPECT_EQ(r.params, (CStarParams{7, 3, 3}));
  EXPECT_THROW(reduce_to_cstar(cycle_graph(3)), PreconditionError);
}

TEST(Reduction, RejectsOtherShapes) {
  EXPECT_THROW(reduce_to_cstar(cycle_graph(6)), PreconditionError);
  EXPECT_THROW(reduce_to_cstar(complete_graph(4)), PreconditionError);
  EXPECT_THROW(reduce_to_cstar(path_graph(5)), PreconditionError);
}

TEST(Reduction, RandomSweepNeverRaisesGamma) {
  Rng rng(43);
  for (int t = 0; t < 200; ++t) {
    const Graph g = random_unicyclic_nonbipartite(rng, uniform_int(rng, 5, 16));
    const Reduction r = reduce_to_cstar(g);
    EXPECT_EQ(r.result.order(), g.order());
    EXPECT_EQ(r.params.s, 3);
    EXPECT_EQ(recognize_c_star(r.result), r.params);
    EXPECT_EQ(r.gamma_input, oracle::domination_number(g));
    EXPECT_EQ(r.gamma_result, oracle::domination_number(r.result));
    EXPECT_LE(r.gamma_result, r.gamma_input);
    EXPECT_EQ(r.equal_gamma, r.gamma_result == r.gamma_input);
  }
}
