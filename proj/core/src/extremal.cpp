#include "qdom/extremal.hpp"

#include <algorithm>
#include <stdexcept>

#include "qdom/domination.hpp"
#include "qdom/errors.hpp"
#include "qdom/spectral.hpp"

namespace qdom {

bool CStarParams::valid() const noexcept {
  return s >= 3 && s % 2 == 1 && l >= 0 && n > s && pendants() >= 1;
}

void CStarParams::validate() const {
  if (s < 3 || s % 2 == 0) throw std::invalid_argument("cycle length s must be odd and >= 3");
  if (l < 0) throw std::invalid_argument("path length l must be >= 0");
  if (pendants() < 1) {
    throw std::invalid_argument("order n must exceed s + l so that at least one pendant exists");
  }
}

std::string describe(const CStarParams& p) {
  return "C*_{" + std::to_string(p.s) + "," + std::to_string(p.l) + "} (n=" + std::to_string(p.n) +
         ")";
}

Vertex c_star_hub(const CStarParams& p) { return p.l == 0 ? 0 : p.s + p.l - 1; }

Graph construct_c_star(const CStarParams& p) {
  p.validate();
  std::vector<Edge> edges;
  for (int i = 0; i < p.s; ++i) edges.emplace_back(i, (i + 1) % p.s);
  Vertex prev = 0;
  for (int i = 0; i < p.l; ++i) {
    edges.emplace_back(prev, p.s + i);
    prev = p.s + i;
  }
  for (Vertex v = p.s + p.l; v < p.n; ++v) edges.emplace_back(prev, v);
  return Graph::build(p.n, edges);
}

Graph construct_cycle_trees(int k, const std::vector<TreeAttachment>& attachments) {
  if (k < 3 || k % 2 == 0) throw std::invalid_argument("cycle length must be odd and >= 3");
  Graph g = cycle_graph(k);
  for (const auto& a : attachments) {
    if (a.position < 1 || a.position > k) {
      throw std::invalid_argument("attachment position " + std::to_string(a.position) +
                                  " outside 1.." + std::to_string(k));
    }
    if (a.tree.order < 2) throw std::invalid_argument("attached trees must be nontrivial");
    const Graph t = Graph::build(a.tree.order, a.tree.edges);
    if (!is_tree(t)) throw std::invalid_argument("attachment is not a tree");
    if (!t.contains(a.tree.root)) throw std::invalid_argument("tree root out of range");
    g = coalesce(g, a.position - 1, t, a.tree.root);
  }
  return g;
}

int gamma_c_star_3(int l) {
  if (l < 0) throw std::invalid_argument("l must be >= 0");
  return (l + 3 + 2) / 3;
}

VerificationReport gamma_monotone_in_l_check(int s, int n) {
  if (s < 3 || s % 2 == 0 || s > n - 2) {
    throw std::invalid_argument("gamma_monotone_in_l_check needs odd s with 3 <= s <= n-2");
  }
  VerificationReport report;
  report.claim = "theorem-3.4";
  report.scope["s"] = std::to_string(s);
  report.scope["n"] = std::to_string(n);
  int prev = domination_number(construct_c_star({n, s, 0})).size;
  for (int l = 0; l + 1 <= n - s - 1; ++l) {
    const Graph next = construct_c_star({n, s, l + 1});
    const int gamma = domination_number(next).size;
    report.count("pairs");
    report.record_min("min_gamma_step", gamma - prev);
    if (gamma < prev) {
      report.fail("C*_{s,l+1}", next,
                  "gamma drops from " + std::to_string(prev) + " to " + std::to_string(gamma) +
                      " at l=" + std::to_string(l));
    }
    prev = gamma;
  }
  return report;
}

VerificationReport gamma_cycle_shrink_check(int k, int l, int n) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  const CStarParams big{n, 2 * k + 1, l};
  const CStarParams small{n, 3, l + k - 1};
  big.validate();
  small.validate();
  VerificationReport report;
  report.claim = "theorem-3.5";
  report.scope["k"] = std::to_string(k);
  report.scope["l"] = std::to_string(l);
  report.scope["n"] = std::to_string(n);
  const Graph gb = construct_c_star(big);
  const int gamma_big = domination_number(gb).size;
  const int gamma_small = domination_number(construct_c_star(small)).size;
  report.count("pairs");
  report.record_min("min_gamma_slack", gamma_big - gamma_small);
  if (gamma_small > gamma_big) {
    report.fail("C*_{2k+1,l}", gb,
                "gamma(" + describe(small) + ")=" + std::to_string(gamma_small) + " exceeds " +
                    std::to_string(gamma_big));
  }
  return report;
}

std::optional<CStarParams> recognize_c_star(const Graph& g) {
  if (!is_unicyclic(g)) return std::nullopt;
  const auto cycle = girth(g);
  if (!cycle || cycle->length() % 2 == 0) return std::nullopt;
  const auto hubs = pendant_neighbors(g);
  if (hubs.size() != 1) return std::nullopt;
  const Vertex hub = hubs.front();
  const auto dist = distances_from(g, cycle->vertices);
  int leaves = 0;
  for (Vertex w : g.neighbors(hub)) leaves += g.degree(w) == 1 ? 1 : 0;
  CStarParams p{g.order(), cycle->length(), dist[hub]};
  if (p.pendants() != leaves || !p.valid()) return std::nullopt;
  return p;
}

Reduction reduce_to_cstar(const Graph& g) {
  if (!is_unicyclic(g) || is_bipartite(g)) {
    throw PreconditionError("reduce_to_cstar needs a connected unicyclic nonbipartite graph");
  }
  Reduction out;
  out.gamma_input = domination_number(g).size;

  auto finish = [&](Graph result, const CStarParams& params) {
    out.result = std::move(result);
    out.params = params;
    out.gamma_result = domination_number(out.result).size;
    out.equal_gamma = out.gamma_result == out.gamma_input;
    if (out.gamma_result > out.gamma_input) {
      throw TheoremViolation("theorem-3.6",
                             "reduction increased gamma from " + std::to_string(out.gamma_input) +
                                 " to " + std::to_string(out.gamma_result));
    }
    return out;
  };

  if (pendant_neighbors(g).empty()) {
    // Bare odd cycle C_n: C*_{3,n-4} has gamma ceil((n-1)/3) <= ceil(n/3).
    if (g.order() < 5) throw PreconditionError("no C*_{3,l} of order " + std::to_string(g.order()));
    out.intermediate = {};
    out.notes.push_back("bare odd cycle mapped directly to C*_{3,n-4}");
    const CStarParams p{g.order(), 3, g.order() - 4};
    return finish(construct_c_star(p), p);
  }

  // Collect every pendant onto the smallest-index pendant neighbor. That
  // vertex only ever gains pendants, so each move strictly grows its load.
  Graph cur = g;
  const Vertex target = pendant_neighbors(g).front();
  for (;;) {
    const auto hubs = pendant_neighbors(cur);
    if (hubs.size() <= 1) break;
    Vertex from = hubs.back() == target ? hubs[hubs.size() - 2] : hubs.back();
    PendantMove move;
    move.from = from;
    move.to = target;
    for (Vertex w : cur.neighbors(from)) {
      if (cur.degree(w) == 1) move.pendants.push_back(w);
    }
    cur = pendant_shift(cur, from, target);
    move.gamma_after = domination_number(cur).size;
    if (move.gamma_after > out.gamma_input) {
      throw TheoremViolation("theorem-3.6", "pendant relocation increased gamma");
    }
    out.moves.push_back(std::move(move));
  }

  const auto shape = recognize_c_star(cur);
  if (!shape) {
    throw TheoremViolation("theorem-3.6", "single-pendant-neighbor graph is not of C* shape");
  }
  out.intermediate = *shape;
  if (shape->s == 3) {
    if (out.moves.empty()) return finish(g, *shape);
    return finish(construct_c_star(*shape), *shape);
  }
  const int k = (shape->s - 1) / 2;
  const CStarParams p{g.order(), 3, shape->l + k - 1};
  out.notes.push_back("cycle shortened from " + describe(*shape) + " to " + describe(p));
  return finish(construct_c_star(p), p);
}

}  // namespace qdom
