#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace qdom {

using Vertex = int;

/// Vertex subset for graphs of order at most 64; bit v stands for vertex v.
using VertexMask = std::uint64_t;

inline constexpr int kMaskBits = 64;

/// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Graphs are immutable values: every surgery helper returns a new graph.
class Graph {
 public:
  /// Builds a graph, rejecting self-loops, out-of-range ids and duplicate
  /// pairs (in either orientation). Throws GraphError.
  static Graph build(int n, std::span<const Edge> edges);
  static Graph build(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  int size() const noexcept { return edge_count_; }

  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }

  /// All edges, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Closed neighborhood N[v] as a bitmask. Requires order() <= 64.
  VertexMask closed_neighborhood(Vertex v) const;
  VertexMask open_neighborhood(Vertex v) const;

  int max_degree() const noexcept;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  int edge_count_ = 0;
};

/// Ordered cycle v0 v1 ... v(k-1) v0 in some host graph.
struct CycleWitness {
  std::vector<Vertex> vertices;

  int length() const noexcept { return static_cast<int>(vertices.size()); }
  bool operator==(const CycleWitness&) const = default;
};

/// Rotates/reflects so that the cycle starts at its smallest vertex and the
/// second entry is the smaller of that vertex's two cycle neighbors.
CycleWitness canonical_cycle(CycleWitness c);

/// True iff the witness is a simple cycle (length >= 3) of `g`.
bool validates(const Graph& g, const CycleWitness& c);

// ---- structural queries -------------------------------------------------

bool is_connected(const Graph& g);

struct Bipartition {
  bool bipartite = false;
  /// Side (0/1) per vertex when bipartite.
  std::vector<int> side;
  /// Odd closed walk (first vertex not repeated at the end) when not bipartite.
  std::vector<Vertex> odd_walk;
};

Bipartition bipartition(const Graph& g);
inline bool is_bipartite(const Graph& g) { return bipartition(g).bipartite; }

/// Shortest odd cycle, or nullopt for bipartite graphs.
std::optional<CycleWitness> odd_girth(const Graph& g);

/// Shortest cycle, or nullopt for forests.
std::optional<CycleWitness> girth(const Graph& g);

/// Every cycle of length exactly g_o(g), canonicalized and sorted.
/// Throws PreconditionError for bipartite input.
std::vector<CycleWitness> shortest_odd_cycles(const Graph& g);

/// BFS distances from a set of sources; unreachable vertices get -1.
std::vector<int> distances_from(const Graph& g, std::span<const Vertex> sources);

/// min d(u, v) over u in a, v in b; -1 when no path exists.
int subgraph_distance(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b);

bool is_unicyclic(const Graph& g);
bool is_tree(const Graph& g);

std::vector<Vertex> pendant_vertices(const Graph& g);
/// Vertices adjacent to at least one degree-1 vertex.
std::vector<Vertex> pendant_neighbors(const Graph& g);

// ---- surgery ------------------------------------------------------------

/// G1(v1) <> G2(v2). Vertices of g1 keep their ids; v2 becomes v1; the other
/// vertices of g2 follow in increasing order starting at g1.order().
Graph coalesce(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2);

/// Throws GraphError if an edge is missing.
Graph delete_edges(const Graph& g, std::span<const Edge> edges);
/// Throws GraphError if an edge is already present (or repeated).
Graph add_edges(const Graph& g, std::span<const Edge> edges);

/// Vertex-induced subgraph; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Graph with the vertices renumbered: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

// ---- small families -----------------------------------------------------

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// K_{1,k}, center 0.
Graph star_graph(int leaves);
Graph empty_graph(int n);

}  // namespace qdom
