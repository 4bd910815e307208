#include "qdom/spanning.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>

#include "qdom/errors.hpp"

namespace qdom {

namespace {

constexpr const char* kClaim = "theorem-3.1";

VertexMask bit(Vertex v) { return VertexMask{1} << v; }

std::vector<Vertex> sorted(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Components of G[mask], each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components_within(const Graph& g, VertexMask mask) {
  std::vector<std::vector<Vertex>> out;
  VertexMask left = mask;
  while (left != 0) {
    const Vertex start = std::countr_zero(left);
    std::vector<Vertex> comp{start};
    left &= ~bit(start);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (left & bit(w)) {
          left &= ~bit(w);
          comp.push_back(w);
        }
      }
    }
    out.push_back(sorted(std::move(comp)));
  }
  return out;
}

// BFS spanning tree of G[comp] rooted at its smallest vertex.
std::vector<Edge> bfs_tree(const Graph& g, const std::vector<Vertex>& comp) {
  const VertexMask inside = to_mask(comp);
  VertexMask seen = bit(comp.front());
  std::vector<Edge> edges;
  std::queue<Vertex> queue;
  queue.push(comp.front());
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(u)) {
      if ((inside & bit(w)) && !(seen & bit(w))) {
        seen |= bit(w);
        edges.emplace_back(u, w);
        queue.push(w);
      }
    }
  }
  return edges;
}

void add_component(PartialSubgraph& f, const Graph& g, const std::vector<Vertex>& comp) {
  for (Vertex v : comp) f.add_vertex(v);
  for (const Edge& e : bfs_tree(g, comp)) f.add_edge(e);
}

// The structure is connected with as many edges as vertices, and D restricted
// to it dominates it through its own edges.
void check_structure(const Graph& g, VertexMask dmask, const PartialSubgraph& f,
                     const std::string& stage) {
  const Graph sub = f.as_graph(g.order());
  const std::vector<Vertex> verts = from_mask(f.vertices);
  const Graph induced = induced_subgraph(sub, verts);
  if (!is_connected(induced) || induced.size() != induced.order()) {
    throw TheoremViolation(kClaim, stage + ": structure is not unicyclic");
  }
  for (Vertex v : verts) {
    if (dmask & bit(v)) continue;
    const auto nb = sub.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return (dmask & bit(w)) != 0; })) {
      throw TheoremViolation(kClaim, stage + ": vertex " + std::to_string(v) +
                                         " is not dominated inside the structure");
    }
  }
}

Vertex smallest_neighbor_in(const Graph& g, Vertex v, VertexMask mask) {
  for (Vertex w : g.neighbors(v)) {
    if (mask & bit(w)) return w;
  }
  return -1;
}

void require_order(const Graph& g) {
  if (g.order() > kMaxExtractionOrder) {
    throw BoundExceeded("extraction supports order <= " + std::to_string(kMaxExtractionOrder));
  }
}

}  // namespace

void PartialSubgraph::add_edge(Edge e) {
  add_vertex(e.u);
  add_vertex(e.v);
  edges.push_back(e);
}

Graph PartialSubgraph::as_graph(int host_order) const {
  std::vector<Edge> sorted_edges = edges;
  std::sort(sorted_edges.begin(), sorted_edges.end());
  return Graph::build(host_order, sorted_edges);
}

CycleWitness select_cycle(const Graph& g, const DominatingSet& d) {
  const auto cycles = shortest_odd_cycles(g);  // canonical and sorted
  const CycleWitness* best = nullptr;
  int best_hits = -1;
  for (const auto& c : cycles) {
    int hits = 0;
    for (Vertex v : c.vertices) hits += d.contains(v) ? 1 : 0;
    if (hits > best_hits) {
      best_hits = hits;
      best = &c;
    }
  }
  const auto& vs = best->vertices;
  const int k = best->length();
  for (int i = 0; i < k; ++i) {
    for (int j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      if (g.has_edge(vs[i], vs[j])) {
        throw TheoremViolation(kClaim, "shortest odd cycle has chord " + std::to_string(vs[i]) +
                                           "-" + std::to_string(vs[j]));
      }
    }
  }
  return *best;
}

DominatingSubset select_dominating_subset(const Graph& g, const DominatingSet& d,
                                          const CycleWitness& c) {
  const std::vector<Vertex> members = d.vertices();
  const VertexMask cycle = to_mask(c.vertices);
  const int m = static_cast<int>(members.size());
  if (m > 30) throw BoundExceeded("dominating set too large for subset search");

  VertexMask best = 0;
  int best_size = std::numeric_limits<int>::max();
  int best_on_cycle = -1;
  for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << m); ++pick) {
    const int size = std::popcount(pick);
    if (size > best_size) continue;
    VertexMask subset = 0;
    VertexMask covered = 0;
    for (int i = 0; i < m; ++i) {
      if (pick >> i & 1U) {
        subset |= bit(members[i]);
        covered |= g.closed_neighborhood(members[i]);
      }
    }
    if ((covered & cycle) != cycle) continue;
    const int on_cycle = std::popcount(subset & cycle);
    const bool better = size < best_size || on_cycle > best_on_cycle ||
                        (on_cycle == best_on_cycle && subset < best);
    if (better) {
      best = subset;
      best_size = size;
      best_on_cycle = on_cycle;
    }
  }
  if (best_size == std::numeric_limits<int>::max()) {
    throw PreconditionError("dominating set does not dominate the cycle");
  }

  DominatingSubset out;
  out.d_c = from_mask(best);
  out.s = from_mask(best & ~cycle);
  for (Vertex v : out.s) {
    const int on_c = std::popcount(g.open_neighborhood(v) & cycle);
    if (on_c != 1) {
      throw TheoremViolation(kClaim, "Claim 1: vertex " + std::to_string(v) + " of S has " +
                                         std::to_string(on_c) + " neighbors on the cycle");
    }
  }
  return out;
}

PartialSubgraph initial_structure(const Graph& g, const CycleWitness& c,
                                  const DominatingSubset& sub) {
  PartialSubgraph f;
  const int k = c.length();
  for (int i = 0; i < k; ++i) f.add_edge(Edge(c.vertices[i], c.vertices[(i + 1) % k]));
  const VertexMask cycle = to_mask(c.vertices);
  for (Vertex v : sub.s) f.add_edge(Edge(v, smallest_neighbor_in(g, v, cycle)));
  return f;
}

std::vector<StitchStep> stitch_components(const Graph& g, const DominatingSet& d,
                                          PartialSubgraph& base) {
  const VertexMask dmask = d.members;
  auto comps = components_within(g, dmask & ~base.vertices);
  std::vector<StitchStep> steps;

  while (!comps.empty()) {
    const std::vector<Vertex> grown = from_mask(base.vertices);
    const auto dist = distances_from(g, grown);

    // Nearest component; components are ordered by smallest vertex already.
    std::size_t target = 0;
    int best = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < comps.size(); ++i) {
      int dc = std::numeric_limits<int>::max();
      for (Vertex v : comps[i]) dc = std::min(dc, dist[v]);
      if (dc < best) {
        best = dc;
        target = i;
      }
    }
    if (best > 3) {
      throw TheoremViolation(kClaim, "Claim 2: nearest component at distance " +
                                         std::to_string(best));
    }

    // Lexicographically least shortest path from the structure to the target.
    const std::vector<Vertex>& comp = comps[target];
    const auto to_target = distances_from(g, comp);
    std::vector<Vertex> path;
    for (Vertex w : grown) {
      if (to_target[w] == best) {
        path.push_back(w);
        break;
      }
    }
    while (to_target[path.back()] > 0) {
      const Vertex u = path.back();
      for (Vertex w : g.neighbors(u)) {
        if (to_target[w] == to_target[u] - 1) {
          path.push_back(w);
          break;
        }
      }
    }

    StitchStep step;
    step.component = comp;
    const VertexMask comp_mask = to_mask(comp);
    std::vector<std::size_t> absorbed_index;
    if (best == 1) {
      step.label = "direct";
    } else {
      const Vertex second = path[1];
      const Vertex reroot = smallest_neighbor_in(g, second, dmask & base.vertices);
      if (dmask & bit(path[0])) {
        step.label = "case1-keep";
      } else if (reroot >= 0) {
        step.label = "case1-reroot";
        path[0] = reroot;
      } else if (g.open_neighborhood(second) & comp_mask) {
        step.label = "case1-target";
      } else {
        step.label = "case2-absorb";
        for (std::size_t i = 0; i < comps.size(); ++i) {
          if (i == target) continue;
          const Vertex dom = smallest_neighbor_in(g, second, to_mask(comps[i]));
          if (dom >= 0) {
            base.add_edge(Edge(second, dom));
            add_component(base, g, comps[i]);
            step.absorbed = comps[i];
            absorbed_index.push_back(i);
            break;
          }
        }
        if (absorbed_index.empty()) {
          throw TheoremViolation(kClaim, "vertex " + std::to_string(second) +
                                             " on a stitch path is undominated");
        }
      }
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) base.add_edge(Edge(path[i], path[i + 1]));
    add_component(base, g, comp);
    step.path = path;
    steps.push_back(step);
    check_structure(g, dmask, base, "stitch " + std::to_string(steps.size()));

    absorbed_index.push_back(target);
    std::sort(absorbed_index.rbegin(), absorbed_index.rend());
    for (std::size_t i : absorbed_index) comps.erase(comps.begin() + static_cast<long>(i));
  }
  return steps;
}

std::vector<PendantAttachment> attach_pendants(const Graph& g, const DominatingSet& d,
                                               PartialSubgraph& f) {
  std::vector<PendantAttachment> out;
  const VertexMask anchors = d.members & f.vertices;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f.contains(v)) continue;
    const Vertex dom = smallest_neighbor_in(g, v, anchors);
    if (dom < 0) {
      throw TheoremViolation(kClaim, "vertex " + std::to_string(v) +
                                         " has no dominator in the structure");
    }
    out.push_back({v, dom});
  }
  for (const auto& a : out) f.add_edge(Edge(a.vertex, a.dominator));
  return out;
}

DominatingSet default_extraction_set(const Graph& g) {
  if (pendant_vertices(g).empty()) return domination_number(g);
  return pendant_respecting_min_dominating_set(g);
}

Graph extract_unicyclic_into(const Graph& g, const DominatingSet* supplied,
                             ExtractionTrace& trace) {
  require_order(g);
  if (!is_connected(g)) throw PreconditionError("extraction needs a connected graph");
  const auto odd = odd_girth(g);
  if (!odd) throw PreconditionError("extraction needs a nonbipartite graph");

  const DominatingSet exact = domination_number(g);
  DominatingSet d;
  if (supplied != nullptr) {
    if (!dominates(g, supplied->members) || std::popcount(supplied->members) != exact.size) {
      throw PreconditionError("supplied set is not a minimum dominating set");
    }
    d = *supplied;
    d.size = exact.size;
  } else {
    d = default_extraction_set(g);
  }
  trace.dominating_set = d.vertices();
  trace.order_bound_holds = g.order() >= 3 * exact.size - 1;

  trace.cycle = select_cycle(g, d);
  const DominatingSubset sub = select_dominating_subset(g, d, trace.cycle);
  trace.d_c = sub.d_c;
  trace.s = sub.s;
  PartialSubgraph f = initial_structure(g, trace.cycle, sub);
  check_structure(g, d.members, f, "initial structure");
  trace.stitches = stitch_components(g, d, f);
  trace.attachments = attach_pendants(g, d, f);

  const Graph h = f.as_graph(g.order());
  for (const Edge& e : h.edges()) {
    if (!g.has_edge(e.u, e.v)) throw TheoremViolation(kClaim, "H uses a non-edge of G");
  }
  if (h.size() != g.order() || !is_connected(h)) {
    throw TheoremViolation(kClaim, "H is not a unicyclic spanning subgraph");
  }
  const auto gh = girth(h);
  if (!gh || gh->length() != odd->length()) {
    throw TheoremViolation(kClaim, "girth of H differs from the odd girth of G");
  }
  if (!dominates(h, d.members)) throw TheoremViolation(kClaim, "D does not dominate H");
  const int gamma_h = domination_number(h).size;
  if (gamma_h != exact.size) {
    throw TheoremViolation(kClaim, "gamma(H)=" + std::to_string(gamma_h) +
                                       " but gamma(G)=" + std::to_string(exact.size));
  }
  return h;
}

Extraction extract_unicyclic(const Graph& g) {
  Extraction out;
  out.h = extract_unicyclic_into(g, nullptr, out.trace);
  return out;
}

Extraction extract_unicyclic(const Graph& g, const DominatingSet& d) {
  Extraction out;
  out.h = extract_unicyclic_into(g, &d, out.trace);
  return out;
}

}  // namespace qdom
