#pragma once

#include <string>
#include <vector>

#include "qdom/domination.hpp"
#include "qdom/graph.hpp"

namespace qdom {

inline constexpr int kMaxExtractionOrder = 32;

/// Subgraph under construction: a vertex set plus the edges chosen so far.
struct PartialSubgraph {
  VertexMask vertices = 0;
  std::vector<Edge> edges;

  bool contains(Vertex v) const noexcept { return (vertices >> v) & 1U; }
  void add_vertex(Vertex v) { vertices |= VertexMask{1} << v; }
  void add_edge(Edge e);
  /// The subgraph as a graph on the host's vertex ids (absent vertices isolated).
  Graph as_graph(int host_order) const;
};

/// One component joined to the growing structure.
struct StitchStep {
  /// Shortest path actually used, from the structure to the component.
  std::vector<Vertex> path;
  /// direct, case1-keep, case1-reroot, case1-target or case2-absorb.
  std::string label;
  /// Vertices of the component reached by the path.
  std::vector<Vertex> component;
  /// Extra component pulled in by case2-absorb (empty otherwise).
  std::vector<Vertex> absorbed;
};

struct PendantAttachment {
  Vertex vertex = 0;
  Vertex dominator = 0;
};

struct ExtractionTrace {
  std::vector<Vertex> dominating_set;
  CycleWitness cycle;
  std::vector<Vertex> d_c;
  std::vector<Vertex> s;
  std::vector<StitchStep> stitches;
  std::vector<PendantAttachment> attachments;
  /// Whether n >= 3*gamma - 1 held for the input. Recorded, not enforced:
  /// the bound fails for some nonbipartite graphs (e.g. a triangle with one
  /// pendant at each vertex) without affecting the extraction.
  bool order_bound_holds = true;
};

/// Shortest odd cycle with the most vertices of d; ties go to the
/// lexicographically least canonical sequence. Throws PreconditionError for
/// bipartite input and TheoremViolation if the chosen cycle has a chord.
CycleWitness select_cycle(const Graph& g, const DominatingSet& d);

struct DominatingSubset {
  std::vector<Vertex> d_c;
  std::vector<Vertex> s;  // d_c minus the cycle
};

/// Minimum-cardinality subset of d dominating V(c), with as many cycle
/// vertices as possible, least bitmask among those. Throws TheoremViolation
/// when some vertex of S has other than exactly one neighbor on c.
DominatingSubset select_dominating_subset(const Graph& g, const DominatingSet& d,
                                          const CycleWitness& c);

/// The cycle together with the pendant edges joining S to it.
PartialSubgraph initial_structure(const Graph& g, const CycleWitness& c,
                                  const DominatingSubset& sub);

/// Grows `base` until it holds every vertex of d, joining the components of
/// G[d minus base] one at a time. Throws TheoremViolation when a connecting
/// path is longer than 3 or a step breaks unicyclicity or domination.
std::vector<StitchStep> stitch_components(const Graph& g, const DominatingSet& d,
                                          PartialSubgraph& base);

/// Hangs every vertex outside f on its smallest-id neighbor in d.
std::vector<PendantAttachment> attach_pendants(const Graph& g, const DominatingSet& d,
                                               PartialSubgraph& f);

struct Extraction {
  Graph h;
  ExtractionTrace trace;
};

/// Unicyclic spanning subgraph H with g(H) = g_o(g) and gamma(H) = gamma(g).
/// Without d the pendant-respecting minimum dominating set is used (the
/// solver witness when g has no pendant vertex). Requires g connected and
/// nonbipartite with order <= 32; a supplied d must be a minimum dominating set.
Extraction extract_unicyclic(const Graph& g);
Extraction extract_unicyclic(const Graph& g, const DominatingSet& d);

/// As above, recording into `trace` as it goes so a caller can show how far
/// the pipeline got when a TheoremViolation escapes.
Graph extract_unicyclic_into(const Graph& g, const DominatingSet* d, ExtractionTrace& trace);

/// The dominating set the pipeline uses by default.
DominatingSet default_extraction_set(const Graph& g);

}  // namespace qdom
