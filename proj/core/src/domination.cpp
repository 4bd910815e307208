#include "qdom/domination.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "qdom/errors.hpp"

namespace qdom {
namespace {

constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }

VertexMask full_mask(int n) { return n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }

// Branch-and-bound over closed neighborhoods. Branching always picks the
// lowest-index undominated vertex and tries each vertex that could cover it.
class Search {
 public:
  explicit Search(const Graph& g) : n_(g.order()), full_(full_mask(g.order())) {
    closed_.reserve(n_);
    for (Vertex v = 0; v < n_; ++v) closed_.push_back(g.closed_neighborhood(v));
  }

  int order() const { return n_; }
  VertexMask closed(Vertex v) const { return closed_[v]; }

  /// Some dominating set using only `allowed`, of size <= limit.
  std::optional<VertexMask> find(int limit, VertexMask allowed, bool independent = false) {
    allowed_ = allowed;
    limit_ = limit;
    independent_ = independent;
    max_cover_ = 1;
    for (Vertex v = 0; v < n_; ++v) {
      if (allowed & bit(v)) max_cover_ = std::max(max_cover_, std::popcount(closed_[v]));
    }
    found_.reset();
    descend(0, 0, 0);
    return found_;
  }

  /// Every dominating set of size exactly `size`, each produced once.
  std::vector<VertexMask> enumerate(int size) {
    limit_ = size;
    max_cover_ = 1;
    for (Vertex v = 0; v < n_; ++v) max_cover_ = std::max(max_cover_, std::popcount(closed_[v]));
    all_.clear();
    collect(0, 0, 0, 0);
    std::sort(all_.begin(), all_.end());
    return all_;
  }

  VertexMask greedy() const {
    VertexMask dominated = 0, chosen = 0;
    while (dominated != full_) {
      Vertex best = 0;
      int gain = -1;
      for (Vertex v = 0; v < n_; ++v) {
        const int cover = std::popcount(closed_[v] & ~dominated);
        if (cover > gain) {
          gain = cover;
          best = v;
        }
      }
      chosen |= bit(best);
      dominated |= closed_[best];
    }
    return chosen;
  }

 private:
  bool pruned(VertexMask dominated, int count) const {
    const int open = std::popcount(full_ & ~dominated);
    return count + (open + max_cover_ - 1) / max_cover_ > limit_;
  }

  // Candidates covering the lowest undominated vertex, largest gain first.
  std::vector<Vertex> candidates(VertexMask dominated, VertexMask pool) const {
    const Vertex u = std::countr_zero(full_ & ~dominated);
    std::vector<Vertex> out = from_mask(closed_[u] & pool);
    std::stable_sort(out.begin(), out.end(), [&](Vertex a, Vertex b) {
      return std::popcount(closed_[a] & ~dominated) > std::popcount(closed_[b] & ~dominated);
    });
    return out;
  }

  bool descend(VertexMask dominated, VertexMask chosen, int count) {
    if (dominated == full_) {
      found_ = chosen;
      return true;
    }
    if (count >= limit_ || pruned(dominated, count)) return false;
    VertexMask pool = allowed_;
    if (independent_) {
      VertexMask blocked = 0;
      for (Vertex c : from_mask(chosen)) blocked |= closed_[c];
      pool &= ~blocked;
    }
    for (Vertex w : candidates(dominated, pool)) {
      if (descend(dominated | closed_[w], chosen | bit(w), count + 1)) return true;
    }
    return false;
  }

  void collect(VertexMask dominated, VertexMask chosen, VertexMask forbidden, int count) {
    if (dominated == full_) {
      if (count == limit_) all_.push_back(chosen);
      return;
    }
    if (count >= limit_ || pruned(dominated, count)) return;
    VertexMask skip = forbidden;
    for (Vertex w : candidates(dominated, full_ & ~forbidden)) {
      collect(dominated | closed_[w], chosen | bit(w), skip, count + 1);
      skip |= bit(w);
    }
  }

  int n_;
  VertexMask full_;
  std::vector<VertexMask> closed_;
  VertexMask allowed_ = 0;
  int limit_ = 0;
  int max_cover_ = 1;
  bool independent_ = false;
  std::optional<VertexMask> found_;
  std::vector<VertexMask> all_;
};

void check_order(const Graph& g, int bound) {
  if (g.order() > bound) {
    throw BoundExceeded("order " + std::to_string(g.order()) + " exceeds limit " +
                        std::to_string(bound));
  }
}

int lower_bound(const Graph& g) {
  const int cover = g.max_degree() + 1;
  return (g.order() + cover - 1) / cover;
}

}  // namespace

VertexMask to_mask(std::span<const Vertex> vertices) {
  VertexMask m = 0;
  for (Vertex v : vertices) {
    if (v < 0 || v >= kMaskBits) throw BoundExceeded("vertex id outside bitmask range");
    m |= bit(v);
  }
  return m;
}

std::vector<Vertex> from_mask(VertexMask mask) {
  std::vector<Vertex> out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

bool dominates(const Graph& g, VertexMask set) {
  VertexMask covered = 0;
  for (Vertex v : from_mask(set)) {
    if (v >= g.order()) return false;
    covered |= g.closed_neighborhood(v);
  }
  return covered == full_mask(g.order());
}

bool dominates(const Graph& g, std::span<const Vertex> set) { return dominates(g, to_mask(set)); }

DominatingSet domination_number(const Graph& g) {
  check_order(g, kMaxDominationOrder);
  Search search(g);
  const int upper = std::popcount(search.greedy());
  int gamma = upper;
  const VertexMask all = full_mask(g.order());
  for (int k = lower_bound(g); k < upper; ++k) {
    if (search.find(k, all)) {
      gamma = k;
      break;
    }
  }
  // Smallest bitmask value: drop vertices from the top whenever a minimum
  // set survives without them.
  VertexMask allowed = all;
  for (Vertex v = g.order() - 1; v >= 0; --v) {
    const VertexMask without = allowed & ~bit(v);
    if (search.find(gamma, without)) allowed = without;
  }
  return DominatingSet{allowed, gamma, true};
}

std::vector<DominatingSet> all_minimum_dominating_sets(const Graph& g) {
  check_order(g, kMaxExhaustiveDominationOrder);
  const int gamma = domination_number(g).size;
  Search search(g);
  std::vector<DominatingSet> out;
  for (VertexMask m : search.enumerate(gamma)) out.push_back(DominatingSet{m, gamma, true});
  return out;
}

DominatingSet pendant_respecting_min_dominating_set(const Graph& g) {
  const auto pendants = pendant_vertices(g);
  if (pendants.empty()) throw PreconditionError("graph has no pendant vertex");
  const auto neighbors = pendant_neighbors(g);
  for (Vertex p : pendants) {
    if (std::binary_search(neighbors.begin(), neighbors.end(), p)) {
      throw PreconditionError("graph has a K2 component; no pendant-free dominating set exists");
    }
  }
  DominatingSet d = domination_number(g);
  const int gamma = d.size;

  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v : neighbors) {
      VertexMask hanging = 0;
      for (Vertex w : g.neighbors(v)) {
        if (g.degree(w) == 1) hanging |= bit(w);
      }
      VertexMask next = (d.members & ~hanging) | bit(v);
      if (next == d.members) continue;
      if (std::popcount(next) < gamma) {
        throw TheoremViolation("theorem-3.2", "pendant exchange produced a smaller dominating set");
      }
      d.members = next;
      changed = true;
    }
  }
  d.size = std::popcount(d.members);
  if (d.size != gamma || !dominates(g, d.members)) {
    throw TheoremViolation("theorem-3.2", "pendant exchange did not preserve a minimum set");
  }
  d.minimal_certified = true;
  return d;
}

int independent_domination_number(const Graph& g) {
  check_order(g, kMaxExhaustiveDominationOrder);
  Search search(g);
  const VertexMask all = full_mask(g.order());
  for (int k = lower_bound(g); k <= g.order(); ++k) {
    if (search.find(k, all, true)) return k;
  }
  return g.order();  // unreachable: a maximal independent set always dominates
}

bool is_claw_free(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto nb = g.neighbors(v);
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (g.has_edge(nb[a], nb[b])) continue;
        for (std::size_t c = b + 1; c < nb.size(); ++c) {
          if (!g.has_edge(nb[a], nb[c]) && !g.has_edge(nb[b], nb[c])) return false;
        }
      }
  }
  return true;
}

}  // namespace qdom
