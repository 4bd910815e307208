#include "qdom/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <unordered_set>

#include "qdom/domination.hpp"
#include "qdom/errors.hpp"
#include "qdom/extremal.hpp"
#include "qdom/parallel.hpp"
#include "qdom/spectral.hpp"

namespace qdom {

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

// Stable color refinement. Colors are ranks of isomorphism-invariant
// signatures, so equal-colored positions can be permuted freely.
std::vector<int> refine_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n);
  for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = -1;
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      for (Vertex w : g.neighbors(v)) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    auto distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Vertex v = 0; v < n; ++v) {
      color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
                                  distinct.begin());
    }
    const int now = static_cast<int>(distinct.size());
    if (now == classes) break;
    classes = now;
  }
  return color;
}

struct PartialOrder {
  std::vector<Vertex> order;
  VertexMask placed = 0;
};

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalOrder) throw BoundExceeded("adjacency code supports order <= 11");
  const int total = pair_count(n);
  std::uint64_t code = 0;
  int idx = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++idx) {
      if (g.has_edge(i, j)) code |= std::uint64_t{1} << (total - 1 - idx);
    }
  }
  return code;
}

CanonicalGraph canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalOrder) {
    throw BoundExceeded("canonical form supports order <= " + std::to_string(kMaxCanonicalOrder));
  }
  const std::vector<int> color = refine_colors(g);

  // Position p is reserved for the p-th vertex in color order.
  std::vector<int> slot_color(color.begin(), color.end());
  std::sort(slot_color.begin(), slot_color.end());

  // Twins (equal neighborhoods up to each other) can be swapped by an
  // automorphism, so only the smallest unplaced twin is tried.
  std::vector<VertexMask> nbhd(n);
  for (Vertex v = 0; v < n; ++v) nbhd[v] = g.open_neighborhood(v);
  std::vector<VertexMask> twins(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < u; ++v) {
      const VertexMask mu = nbhd[u] & ~(VertexMask{1} << v);
      const VertexMask mv = nbhd[v] & ~(VertexMask{1} << u);
      if (mu == mv) twins[u] |= VertexMask{1} << v;
    }
  }

  // Every prefix of the least code is the least reachable prefix, so the
  // search keeps only the orderings that tie for the best column so far.
  std::vector<PartialOrder> frontier(1);
  for (int j = 0; j < n; ++j) {
    std::vector<PartialOrder> next;
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (const auto& st : frontier) {
      for (Vertex v = 0; v < n; ++v) {
        if (color[v] != slot_color[j] || (st.placed >> v & 1U)) continue;
        if (twins[v] & ~st.placed) continue;
        std::uint64_t column = 0;
        for (int i = 0; i < j; ++i) {
          column = (column << 1) | (nbhd[v] >> st.order[i] & 1U);
        }
        if (column > best) continue;
        if (column < best) {
          best = column;
          next.clear();
        }
        PartialOrder ext = st;
        ext.order.push_back(v);
        ext.placed |= VertexMask{1} << v;
        next.push_back(std::move(ext));
      }
    }
    frontier = std::move(next);
  }

  const auto& order = frontier.front().order;
  std::vector<Vertex> perm(n);
  for (int p = 0; p < n; ++p) perm[order[p]] = p;
  CanonicalGraph out;
  out.graph = relabel(g, perm);
  out.form = adjacency_code(out.graph);
  return out;
}

namespace {

std::vector<CanonicalGraph> sorted_unique(std::vector<std::vector<CanonicalGraph>>& shards) {
  std::vector<CanonicalGraph> all;
  for (auto& s : shards) all.insert(all.end(), s.begin(), s.end());
  std::sort(all.begin(), all.end(),
            [](const CanonicalGraph& a, const CanonicalGraph& b) { return a.form < b.form; });
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

// Children of each parent, canonicalized and deduplicated per shard.
template <class Extend>
std::vector<CanonicalGraph> grow(const std::vector<CanonicalGraph>& parents, int jobs,
                                 Extend&& extend) {
  const std::size_t shards = static_cast<std::size_t>(std::max(1, jobs));
  std::vector<std::vector<CanonicalGraph>> found(shards);
  std::vector<std::unordered_set<std::uint64_t>> seen(shards);
  parallel_for(shards, jobs, [&](std::size_t shard) {
    for (std::size_t i = shard; i < parents.size(); i += shards) {
      extend(parents[i].graph, [&](const Graph& child) {
        CanonicalGraph c = canonical_form(child);
        if (seen[shard].insert(c.form).second) found[shard].push_back(std::move(c));
      });
    }
  });
  return sorted_unique(found);
}

Graph with_new_vertex(const Graph& g, VertexMask neighbors) {
  std::vector<Edge> edges = g.edges();
  const Vertex v = g.order();
  for (Vertex u = 0; u < v; ++u) {
    if (neighbors >> u & 1U) edges.emplace_back(u, v);
  }
  return Graph::build(v + 1, edges);
}

std::mutex cache_mutex;
std::map<int, std::vector<CanonicalGraph>> connected_cache;
std::map<int, std::vector<CanonicalGraph>> odd_unicyclic_cache;
std::map<int, std::vector<CanonicalGraph>> unicyclic_cache;

// Every connected graph on n >= 2 vertices has a non-cut vertex, so it arises
// from a connected graph on n - 1 vertices by adding a vertex.
const std::vector<CanonicalGraph>& connected_classes(int n, int jobs) {
  {
    std::lock_guard lock(cache_mutex);
    auto it = connected_cache.find(n);
    if (it != connected_cache.end()) return it->second;
  }
  std::vector<CanonicalGraph> out;
  if (n == 1) {
    out.push_back(canonical_form(empty_graph(1)));
  } else {
    const auto& parents = connected_classes(n - 1, jobs);
    out = grow(parents, jobs, [](const Graph& p, auto&& emit) {
      const VertexMask all = (VertexMask{1} << p.order()) - 1;
      for (VertexMask s = 1; s <= all; ++s) emit(with_new_vertex(p, s));
    });
  }
  std::lock_guard lock(cache_mutex);
  return connected_cache.emplace(n, std::move(out)).first->second;
}

// A unicyclic graph that is not a cycle has a pendant vertex whose removal
// leaves a unicyclic graph.
const std::vector<CanonicalGraph>& unicyclic_classes(int n, bool odd_only, int jobs) {
  auto& cache = odd_only ? odd_unicyclic_cache : unicyclic_cache;
  {
    std::lock_guard lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<CanonicalGraph> out;
  if (n >= 4) {
    const auto& parents = unicyclic_classes(n - 1, odd_only, jobs);
    out = grow(parents, jobs, [](const Graph& p, auto&& emit) {
      for (Vertex u = 0; u < p.order(); ++u) emit(with_new_vertex(p, VertexMask{1} << u));
    });
  }
  if (n >= 3 && (!odd_only || n % 2 == 1)) {
    out.push_back(canonical_form(cycle_graph(n)));
    std::sort(out.begin(), out.end(),
              [](const CanonicalGraph& a, const CanonicalGraph& b) { return a.form < b.form; });
  }
  std::lock_guard lock(cache_mutex);
  return cache.emplace(n, std::move(out)).first->second;
}

}  // namespace

std::vector<CanonicalGraph> enumerate_connected(int n, const EnumerationFilter& filter, int jobs) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  const int bound = filter.unicyclic ? kMaxUnicyclicEnumerationOrder : kMaxGeneralEnumerationOrder;
  if (n > bound) {
    throw BoundExceeded("enumeration supports order <= " + std::to_string(bound) +
                        (filter.unicyclic ? " for unicyclic classes" : ""));
  }
  const auto& base = filter.unicyclic ? unicyclic_classes(n, filter.nonbipartite, jobs)
                                      : connected_classes(n, jobs);
  std::vector<char> keep(base.size(), 1);
  parallel_for(base.size(), jobs, [&](std::size_t i) {
    const Graph& g = base[i].graph;
    if (filter.nonbipartite && is_bipartite(g)) keep[i] = 0;
    else if (filter.unicyclic && !is_unicyclic(g)) keep[i] = 0;
    else if (filter.gamma && domination_number(g).size != *filter.gamma) keep[i] = 0;
  });
  std::vector<CanonicalGraph> out;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (keep[i]) out.push_back(base[i]);
  }
  return out;
}

VerificationReport verify_order_bound(int max_n, int jobs) {
  if (max_n > kMaxGeneralEnumerationOrder) {
    throw BoundExceeded("order bound sweep supports max_n <= 8");
  }
  VerificationReport report;
  report.claim = "theorem-3.8";
  report.scope["max_n"] = std::to_string(max_n);
  for (int n = 3; n <= max_n; ++n) {
    const auto classes = enumerate_connected(n, {.nonbipartite = true, .unicyclic = false, .gamma = std::nullopt}, jobs);
    std::vector<int> gamma(classes.size());
    parallel_for(classes.size(), jobs,
                 [&](std::size_t i) { gamma[i] = domination_number(classes[i].graph).size; });
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const int slack = n - (3 * gamma[i] - 1);
      report.count("classes");
      report.record_min("min_slack", slack);
      if (slack < 0) {
        report.fail("n < 3*gamma-1", classes[i].graph,
                    "n=" + std::to_string(n) + " gamma=" + std::to_string(gamma[i]));
      }
    }
  }
  const Graph tight = construct_c_star({5, 3, 1});
  const int tight_gamma = domination_number(tight).size;
  report.witness("C*_{3,1}", tight, tight_gamma, "tightness: n = 3*gamma - 1");
  if (tight_gamma != 2) {
    report.fail("C*_{3,1}", tight, "expected gamma 2, got " + std::to_string(tight_gamma));
  }
  return report;
}

Graph predicted_minimizer(int n, int gamma) {
  if (gamma < 1 || n < 4 || n < 3 * gamma - 1) {
    throw PreconditionError("infeasible (n, gamma) = (" + std::to_string(n) + ", " +
                            std::to_string(gamma) + ")");
  }
  const int l = n <= 3 * gamma + 1 ? n - 4 : 3 * gamma - 3;
  return construct_c_star({n, 3, l});
}

namespace {

VerificationReport verify_minimizer(const char* claim, int n, int gamma, bool unicyclic,
                                    int jobs) {
  const Graph predicted = predicted_minimizer(n, gamma);
  const int l = n <= 3 * gamma + 1 ? n - 4 : 3 * gamma - 3;
  const std::uint64_t predicted_form = canonical_form(predicted).form;

  EnumerationFilter filter{.nonbipartite = true, .unicyclic = unicyclic, .gamma = gamma};
  const auto classes = enumerate_connected(n, filter, jobs);
  if (classes.empty()) throw PreconditionError("no class realizes this (n, gamma)");

  std::vector<double> kappa(classes.size());
  std::vector<SpectralAudit> audits(classes.size());
  parallel_for(classes.size(), jobs, [&](std::size_t i) {
    kappa[i] = least_q_eigenpair(classes[i].graph, &audits[i]).value;
  });

  VerificationReport report;
  report.claim = claim;
  report.scope["n"] = std::to_string(n);
  report.scope["gamma"] = std::to_string(gamma);
  report.scope["family"] = unicyclic ? "unicyclic nonbipartite" : "connected nonbipartite";
  report.count("classes", static_cast<long long>(classes.size()));
  if (n == 3 * gamma + 1) report.notes.push_back("n = 3*gamma+1: both case labels name C*_{3,n-4}");

  std::size_t argmin = 0;
  for (std::size_t i = 1; i < classes.size(); ++i) {
    if (kappa[i] < kappa[argmin]) argmin = i;
  }
  double runner_up = std::numeric_limits<double>::infinity();
  std::size_t runner = argmin;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i != argmin && kappa[i] < runner_up) {
      runner_up = kappa[i];
      runner = i;
    }
  }
  SpectralAudit audit;
  for (const auto& a : audits) audit.merge(a);
  audit.export_to(report);
  report.record_min("min_q_min", kappa[argmin]);
  report.witness(describe({n, 3, l}), predicted, std::nullopt, "predicted minimizer");
  report.witness("minimizer", classes[argmin].graph, kappa[argmin]);

  if (classes[argmin].form != predicted_form) {
    report.fail("minimizer", classes[argmin].graph,
                "least q_min is not attained by " + describe({n, 3, l}), kappa[argmin]);
  }
  if (runner != argmin) {
    const double gap = runner_up - kappa[argmin];
    report.record_min("min_runner_up_gap", gap);
    report.witness("runner-up", classes[runner].graph, runner_up);
    if (gap <= 1e-9) {
      report.fail("runner-up", classes[runner].graph, "minimizer is not unique within 1e-9",
                  runner_up);
    }
  }
  return report;
}

}  // namespace

VerificationReport verify_unicyclic_minimizer(int n, int gamma, int jobs) {
  if (n > kMaxUnicyclicEnumerationOrder) throw BoundExceeded("unicyclic sweep supports n <= 10");
  return verify_minimizer("theorem-4.1", n, gamma, true, jobs);
}

VerificationReport verify_global_minimizer(int n, int gamma, int jobs) {
  if (n > kMaxGeneralEnumerationOrder) throw BoundExceeded("global sweep supports n <= 8");
  return verify_minimizer("theorem-4.2", n, gamma, false, jobs);
}

}  // namespace qdom
