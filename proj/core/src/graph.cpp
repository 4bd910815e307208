#include "qdom/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "qdom/errors.hpp"

namespace qdom {
namespace {

struct BfsTree {
  std::vector<int> depth;
  std::vector<Vertex> parent;
};

BfsTree bfs_tree(const Graph& g, Vertex root) {
  const int n = g.order();
  BfsTree t{std::vector<int>(n, -1), std::vector<Vertex>(n, -1)};
  std::queue<Vertex> q;
  t.depth[root] = 0;
  q.push(root);
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u)) {
      if (t.depth[w] < 0) {
        t.depth[w] = t.depth[u] + 1;
        t.parent[w] = u;
        q.push(w);
      }
    }
  }
  return t;
}

// Cycle formed by the non-tree edge uv and the tree paths up to their
// lowest common ancestor.
std::vector<Vertex> tree_cycle(const BfsTree& t, Vertex u, Vertex v) {
  std::vector<Vertex> up_u{u}, up_v{v};
  Vertex a = u, b = v;
  while (t.depth[a] > t.depth[b]) up_u.push_back(a = t.parent[a]);
  while (t.depth[b] > t.depth[a]) up_v.push_back(b = t.parent[b]);
  while (a != b) {
    up_u.push_back(a = t.parent[a]);
    up_v.push_back(b = t.parent[b]);
  }
  // up_u ends at the ancestor; up_v too (drop its copy).
  up_v.pop_back();
  std::vector<Vertex> cycle(up_u.rbegin(), up_u.rend());
  cycle.insert(cycle.end(), up_v.begin(), up_v.end());
  return cycle;
}

std::optional<CycleWitness> shortest_cycle(const Graph& g, bool odd_only) {
  std::optional<CycleWitness> best;
  for (Vertex s = 0; s < g.order(); ++s) {
    const BfsTree t = bfs_tree(g, s);
    for (Vertex u = 0; u < g.order(); ++u) {
      if (t.depth[u] < 0) continue;
      for (Vertex v : g.neighbors(u)) {
        if (v < u || t.parent[v] == u || t.parent[u] == v) continue;
        if (odd_only && t.depth[u] != t.depth[v]) continue;
        auto cycle = tree_cycle(t, u, v);
        if (!best || static_cast<int>(cycle.size()) < best->length()) {
          best = CycleWitness{std::move(cycle)};
        }
      }
    }
  }
  if (best) best = canonical_cycle(std::move(*best));
  return best;
}

void check_vertex(int n, Vertex v) {
  if (v < 0 || v >= n) {
    throw GraphError("vertex id " + std::to_string(v) + " out of range for order " +
                     std::to_string(n));
  }
}

}  // namespace

Graph Graph::build(int n, std::span<const Edge> edges) {
  if (n < 1) throw GraphError("graph order must be at least 1");
  Graph g;
  g.adjacency_.assign(n, {});
  for (const Edge& e : edges) {
    check_vertex(n, e.u);
    check_vertex(n, e.v);
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : g.adjacency_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      throw GraphError("duplicate edge");
    }
  }
  g.edge_count_ = static_cast<int>(edges.size());
  return g;
}

Graph Graph::build(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [u, v] : edges) list.emplace_back(u, v);
  return build(n, list);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexMask Graph::open_neighborhood(Vertex v) const {
  if (order() > kMaskBits) throw BoundExceeded("bitmask paths require order <= 64");
  VertexMask m = 0;
  for (Vertex w : adjacency_.at(v)) m |= VertexMask{1} << w;
  return m;
}

VertexMask Graph::closed_neighborhood(Vertex v) const {
  return open_neighborhood(v) | (VertexMask{1} << v);
}

int Graph::max_degree() const noexcept {
  int d = 0;
  for (const auto& nb : adjacency_) d = std::max(d, static_cast<int>(nb.size()));
  return d;
}

CycleWitness canonical_cycle(CycleWitness c) {
  auto& vs = c.vertices;
  if (vs.size() < 3) return c;
  std::rotate(vs.begin(), std::min_element(vs.begin(), vs.end()), vs.end());
  if (vs.back() < vs[1]) std::reverse(vs.begin() + 1, vs.end());
  return c;
}

bool validates(const Graph& g, const CycleWitness& c) {
  const auto& vs = c.vertices;
  if (vs.size() < 3) return false;
  std::vector<Vertex> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!g.has_edge(vs[i], vs[(i + 1) % vs.size()])) return false;
  }
  return true;
}

bool is_connected(const Graph& g) {
  const BfsTree t = bfs_tree(g, 0);
  return std::all_of(t.depth.begin(), t.depth.end(), [](int d) { return d >= 0; });
}

Bipartition bipartition(const Graph& g) {
  const int n = g.order();
  Bipartition out;
  out.side.assign(n, -1);
  for (Vertex root = 0; root < n; ++root) {
    if (out.side[root] >= 0) continue;
    const BfsTree t = bfs_tree(g, root);
    for (Vertex v = 0; v < n; ++v) {
      if (t.depth[v] >= 0) out.side[v] = t.depth[v] % 2;
    }
    for (Vertex u = 0; u < n; ++u) {
      if (t.depth[u] < 0) continue;
      for (Vertex v : g.neighbors(u)) {
        if (t.depth[u] == t.depth[v]) {
          out.odd_walk = tree_cycle(t, u, v);
          out.side.clear();
          return out;
        }
      }
    }
  }
  out.bipartite = true;
  return out;
}

std::optional<CycleWitness> odd_girth(const Graph& g) { return shortest_cycle(g, true); }

std::optional<CycleWitness> girth(const Graph& g) { return shortest_cycle(g, false); }

std::vector<CycleWitness> shortest_odd_cycles(const Graph& g) {
  const auto go = odd_girth(g);
  if (!go) throw PreconditionError("shortest_odd_cycles requires a nonbipartite graph");
  const int len = go->length();
  const int n = g.order();
  std::vector<CycleWitness> out;

  std::vector<Vertex> path;
  std::vector<char> on_path(n, 0);
  std::vector<int> dist;  // distance back to the start inside vertices >= start

  auto extend = [&](auto&& self, Vertex start) -> void {
    const Vertex last = path.back();
    const int remaining = len - static_cast<int>(path.size());
    if (remaining == 0) {
      if (g.has_edge(last, start) && path[1] < path.back()) {
        out.push_back(CycleWitness{path});
      }
      return;
    }
    for (Vertex w : g.neighbors(last)) {
      if (w <= start || on_path[w]) continue;
      if (dist[w] < 0 || dist[w] > remaining) continue;
      path.push_back(w);
      on_path[w] = 1;
      self(self, start);
      on_path[w] = 0;
      path.pop_back();
    }
  };

  for (Vertex s = 0; s < n; ++s) {
    // Distances to s through vertices >= s only.
    dist.assign(n, -1);
    std::queue<Vertex> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (w > s && dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    path.assign(1, s);
    on_path[s] = 1;
    extend(extend, s);
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end(),
            [](const CycleWitness& a, const CycleWitness& b) { return a.vertices < b.vertices; });
  return out;
}

std::vector<int> distances_from(const Graph& g, std::span<const Vertex> sources) {
  std::vector<int> dist(g.order(), -1);
  std::queue<Vertex> q;
  for (Vertex s : sources) {
    if (dist.at(s) < 0) {
      dist[s] = 0;
      q.push(s);
    }
  }
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

int subgraph_distance(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
  const auto dist = distances_from(g, a);
  int best = -1;
  for (Vertex v : b) {
    if (dist.at(v) >= 0 && (best < 0 || dist[v] < best)) best = dist[v];
  }
  return best;
}

bool is_unicyclic(const Graph& g) { return g.size() == g.order() && is_connected(g); }

bool is_tree(const Graph& g) { return g.size() == g.order() - 1 && is_connected(g); }

std::vector<Vertex> pendant_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> pendant_neighbors(const Graph& g) {
  std::vector<char> mark(g.order(), 0);
  for (Vertex v : pendant_vertices(g)) mark[g.neighbors(v).front()] = 1;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (mark[v]) out.push_back(v);
  }
  return out;
}

Graph coalesce(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
  check_vertex(g1.order(), v1);
  check_vertex(g2.order(), v2);
  std::vector<Vertex> map2(g2.order());
  Vertex next = g1.order();
  for (Vertex v = 0; v < g2.order(); ++v) map2[v] = (v == v2) ? v1 : next++;
  std::vector<Edge> edges = g1.edges();
  for (const Edge& e : g2.edges()) edges.emplace_back(map2[e.u], map2[e.v]);
  return Graph::build(g1.order() + g2.order() - 1, edges);
}

Graph delete_edges(const Graph& g, std::span<const Edge> edges) {
  std::vector<Edge> remove(edges.begin(), edges.end());
  for (auto& e : remove) e = Edge(e.u, e.v);
  std::sort(remove.begin(), remove.end());
  for (const Edge& e : remove) {
    if (!g.has_edge(e.u, e.v)) {
      throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " not present");
    }
  }
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(remove.begin(), remove.end(), e)) kept.push_back(e);
  }
  return Graph::build(g.order(), kept);
}

Graph add_edges(const Graph& g, std::span<const Edge> edges) {
  std::vector<Edge> all = g.edges();
  for (const Edge& e : edges) {
    if (g.has_edge(e.u, e.v)) {
      throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                       " already present");
    }
    all.push_back(e);
  }
  return Graph::build(g.order(), all);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index.at(vertices[i]) = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.emplace_back(index[e.u], index[e.v]);
  }
  return Graph::build(static_cast<int>(vertices.size()), edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw GraphError("permutation size mismatch");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph::build(g.order(), edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::build(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::build(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::build(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::build(leaves + 1, edges);
}

Graph empty_graph(int n) { return Graph::build(n, std::span<const Edge>{}); }

}  // namespace qdom
