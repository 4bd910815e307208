#include "qdom/random_graphs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qdom {

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<Vertex> random_permutation(Rng& rng, int n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

Graph random_connected_graph(Rng& rng, int n, double extra) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (Vertex v = 1; v < n; ++v) {
    const Vertex u = uniform_int(rng, 0, v - 1);
    adj[u][v] = adj[v][u] = 1;
  }
  std::bernoulli_distribution coin(extra);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (adj[u][v] || coin(rng)) edges.emplace_back(u, v);
    }
  }
  const Graph g = Graph::build(n, edges);
  return relabel(g, random_permutation(rng, n));
}

Graph random_connected_nonbipartite(Rng& rng, int n, double extra) {
  if (n < 3) throw std::invalid_argument("a nonbipartite graph needs at least 3 vertices");
  for (;;) {
    Graph g = random_connected_graph(rng, n, extra);
    if (!is_bipartite(g)) return g;
  }
}

namespace {

// Hangs vertices first..n-1 one at a time off a random vertex already present.
void grow_trees(Rng& rng, std::vector<Edge>& edges, std::vector<Vertex> pool, int first, int n) {
  for (Vertex v = first; v < n; ++v) {
    const Vertex u = pool[uniform_int(rng, 0, static_cast<int>(pool.size()) - 1)];
    edges.emplace_back(u, v);
    pool.push_back(v);
  }
}

}  // namespace

Graph random_unicyclic_nonbipartite(Rng& rng, int n) {
  if (n < 3) throw std::invalid_argument("order must be at least 3");
  const int k = 2 * uniform_int(rng, 1, (n - 1) / 2) + 1;
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  std::vector<Vertex> pool(k);
  std::iota(pool.begin(), pool.end(), 0);
  grow_trees(rng, edges, pool, k, n);
  return relabel(Graph::build(n, edges), random_permutation(rng, n));
}

CycleTreesInstance random_cycle_trees(Rng& rng, int k, int n) {
  if (k < 3 || k % 2 == 0 || n <= k) throw std::invalid_argument("need odd k >= 3 and n > k");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  std::vector<Vertex> pool(k);
  std::iota(pool.begin(), pool.end(), 0);
  grow_trees(rng, edges, pool, k, n);
  CycleTreesInstance out;
  out.graph = Graph::build(n, edges);
  out.k = k;
  for (Vertex v = 0; v < k; ++v) {
    if (out.graph.degree(v) > 2) out.roots.push_back(v);
  }
  return out;
}

}  // namespace qdom
