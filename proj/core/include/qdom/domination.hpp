#pragma once

#include <span>
#include <vector>

#include "qdom/graph.hpp"

namespace qdom {

inline constexpr int kMaxDominationOrder = 64;
inline constexpr int kMaxExhaustiveDominationOrder = 32;

VertexMask to_mask(std::span<const Vertex> vertices);
std::vector<Vertex> from_mask(VertexMask mask);

struct DominatingSet {
  VertexMask members = 0;
  int size = 0;
  /// Set by the exact solver: no dominating set of size - 1 exists.
  bool minimal_certified = false;

  std::vector<Vertex> vertices() const { return from_mask(members); }
  bool contains(Vertex v) const noexcept { return (members >> v) & 1U; }
  bool operator==(const DominatingSet&) const = default;
};

/// Every vertex lies in the closed neighborhood of some member.
bool dominates(const Graph& g, VertexMask set);
bool dominates(const Graph& g, std::span<const Vertex> set);

/// Exact gamma(g) by branch-and-bound over closed-neighborhood bitmasks.
/// The witness is the minimum dominating set with the smallest bitmask value.
/// Throws BoundExceeded for order > 64 (no time bound is promised near 64).
DominatingSet domination_number(const Graph& g);

/// Every minimum dominating set, ascending by bitmask. Order <= 32.
std::vector<DominatingSet> all_minimum_dominating_sets(const Graph& g);

/// Minimum dominating set containing every pendant neighbor and no pendant
/// vertex, obtained from the solver witness by the pendant exchange
/// D -> (D minus the pendants at v) plus v, repeated until nothing changes.
/// Throws PreconditionError when g has no pendant vertex or has a K2
/// component, TheoremViolation if an exchange shrinks a minimum set.
DominatingSet pendant_respecting_min_dominating_set(const Graph& g);

/// Smallest dominating set that is also independent. Order <= 32.
int independent_domination_number(const Graph& g);

/// No vertex has three pairwise non-adjacent neighbors.
bool is_claw_free(const Graph& g);

}  // namespace qdom
