#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qdom/extremal.hpp"
#include "qdom/graph.hpp"

namespace qdom {

using Rng = std::mt19937_64;

/// Uniform random labeled tree (random attachment order, then shuffled ids)
/// plus each remaining pair independently with probability `extra`.
Graph random_connected_graph(Rng& rng, int n, double extra);

/// Rejection-samples random_connected_graph until it has an odd cycle. n >= 3.
Graph random_connected_nonbipartite(Rng& rng, int n, double extra);

/// Odd cycle of random length with random trees hanging off it, ids shuffled.
/// n >= 3.
Graph random_unicyclic_nonbipartite(Rng& rng, int n);

/// Odd cycle C_k (labels 0..k-1) with random trees attached; the attachment
/// roots are the cycle vertices that received a tree. n > k.
struct CycleTreesInstance {
  Graph graph;
  int k = 3;
  std::vector<Vertex> roots;
};
CycleTreesInstance random_cycle_trees(Rng& rng, int k, int n);

std::vector<Vertex> random_permutation(Rng& rng, int n);

/// Uniform integer in [lo, hi].
int uniform_int(Rng& rng, int lo, int hi);

}  // namespace qdom
