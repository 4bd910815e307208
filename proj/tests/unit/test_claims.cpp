#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qdom/claims.hpp"
#include "qdom/enumerate.hpp"
#include "qdom/errors.hpp"

using namespace qdom;

namespace {

ClaimBounds small_bounds(const std::string& id) {
  ClaimBounds b;
  b.seed = 7;
  b.jobs = 2;
  if (id == "theorem-3.8") b.max_n = 6;
  if (id == "theorem-4.1") {
    b.n = 7;
    b.gamma = 2;
  }
  if (id == "theorem-4.2") {
    b.n = 6;
    b.gamma = 2;
  }
  return b;
}

}  // namespace

TEST(Claims, RegistryOrder) {
  const auto& ids = claim_ids();
  ASSERT_FALSE(ids.empty());
  EXPECT_EQ(ids.front(), "q-bipartite");
  EXPECT_EQ(ids.back(), "solver-crosscheck");
  EXPECT_NE(std::find(ids.begin(), ids.end(), "lemma-2.1"), ids.end());
  EXPECT_NE(std::find(ids.begin(), ids.end(), "theorem-4.2"), ids.end());
}

TEST(Claims, UnknownIdThrows) {
  EXPECT_THROW(run_claim("lemma-9.9"), UnknownClaim);
}

class EveryClaim : public ::testing::TestWithParam<std::string> {};

TEST_P(EveryClaim, RunsWithExpectedOutcome) {
  const std::string id = GetParam();
  const VerificationReport r = run_claim(id, small_bounds(id));
  EXPECT_EQ(r.claim, id);
  if (id == "theorem-3.8") {
    EXPECT_EQ(r.outcome, Outcome::fail);
    EXPECT_FALSE(r.witnesses.empty());
  } else {
    EXPECT_EQ(r.outcome, Outcome::pass) << (r.notes.empty() ? std::string() : r.notes.front());
  }
}

INSTANTIATE_TEST_SUITE_P(Registry, EveryClaim, ::testing::ValuesIn(claim_ids()),
                         [](const auto& info) {
                           std::string name = info.param;
                           for (char& c : name) {
                             if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
                           }
                           return name;
                         });

TEST(Claims, DeterministicForSeed) {
  ClaimBounds b;
  b.seed = 11;
  b.trials = 40;
  const auto a = run_claim("lemma-2.1", b);
  const auto c = run_claim("lemma-2.1", b);
  EXPECT_EQ(a.counts, c.counts);
  EXPECT_EQ(a.margins, c.margins);
}

TEST(Claims, OrderBoundCounterexample) {
  ClaimBounds b;
  b.max_n = 6;
  const auto r = run_claim("theorem-3.8", b);
  ASSERT_EQ(r.outcome, Outcome::fail);
  const Graph corona = Graph::build(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}, {2, 5}});
  EXPECT_EQ(oracle::domination_number(corona), 3);
  const auto form = canonical_form(corona).form;
  bool found = false;
  for (const auto& w : r.witnesses) found |= canonical_form(w.graph).form == form;
  EXPECT_TRUE(found);
}

TEST(Claims, ExampleGraph) {
  const Graph g = extraction_example_graph();
  EXPECT_EQ(g.order(), 9);
  EXPECT_EQ(g.size(), 11);
  EXPECT_EQ(oracle::domination_number(g), 3);
  EXPECT_EQ(oracle::shortest_odd_cycle_length(g), 5);
  EXPECT_EQ(girth(g)->length(), 4);
  const auto d = extraction_example_dominating_set();
  EXPECT_TRUE(oracle::dominates(g, 0b101001U));
  EXPECT_EQ(d.size(), 3U);
}

TEST(Claims, BruteForceDominationBound) {
  EXPECT_THROW(brute_force_domination_number(path_graph(21)), BoundExceeded);
}
