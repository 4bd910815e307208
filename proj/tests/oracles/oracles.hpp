#pragma once

// Independent reference implementations used only by tests. None of these
// call into the solver they check: graphs are read through edges() and
// has_edge() alone.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "qdom/graph.hpp"

namespace oracle {

using qdom::Edge;
using qdom::Graph;

inline std::vector<std::vector<int>> adjacency_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (const Edge& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

/// Plain subset scan: is every vertex in S or adjacent to S?
inline bool dominates(const Graph& g, std::uint32_t subset) {
  const auto a = adjacency_matrix(g);
  const int n = g.order();
  for (int v = 0; v < n; ++v) {
    if (subset >> v & 1U) continue;
    bool hit = false;
    for (int u = 0; u < n && !hit; ++u) hit = (subset >> u & 1U) && a[u][v];
    if (!hit) return false;
  }
  return true;
}

/// All minimum dominating sets as bitmasks, ascending. n <= 20.
inline std::vector<std::uint32_t> minimum_dominating_sets(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint32_t> best;
  int best_size = n + 1;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    const int size = __builtin_popcount(s);
    if (size > best_size || !dominates(g, s)) continue;
    if (size < best_size) {
      best_size = size;
      best.clear();
    }
    best.push_back(s);
  }
  return best;
}

inline int domination_number(const Graph& g) {
  return __builtin_popcount(minimum_dominating_sets(g).front());
}

inline bool independent(const Graph& g, std::uint32_t s) {
  for (const Edge& e : g.edges()) {
    if ((s >> e.u & 1U) && (s >> e.v & 1U)) return false;
  }
  return true;
}

inline int independent_domination_number(const Graph& g) {
  int best = g.order();
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << g.order()); ++s) {
    if (independent(g, s) && dominates(g, s)) best = std::min(best, __builtin_popcount(s));
  }
  return best;
}

/// Every simple cycle as a sorted-rotation vertex sequence (length >= 3),
/// found by DFS from each start over larger vertices.
inline std::vector<std::vector<int>> all_cycles(const Graph& g) {
  const auto a = adjacency_matrix(g);
  const int n = g.order();
  std::set<std::vector<int>> found;
  std::vector<int> path;
  std::vector<char> used(n, 0);
  auto dfs = [&](auto&& self, int start, int u) -> void {
    for (int w = 0; w < n; ++w) {
      if (!a[u][w]) continue;
      if (w == start && path.size() >= 3) {
        std::vector<int> c = path;
        if (c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
        found.insert(c);
      }
      if (w > start && !used[w]) {
        used[w] = 1;
        path.push_back(w);
        self(self, start, w);
        path.pop_back();
        used[w] = 0;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    used.assign(n, 0);
    used[s] = 1;
    dfs(dfs, s, s);
  }
  return {found.begin(), found.end()};
}

inline int shortest_odd_cycle_length(const Graph& g) {
  int best = 0;
  for (const auto& c : all_cycles(g)) {
    const int len = static_cast<int>(c.size());
    if (len % 2 == 1 && (best == 0 || len < best)) best = len;
  }
  return best;  // 0 when bipartite
}

/// Least code over all n! vertex orderings, same bit layout as the library.
inline std::uint64_t brute_canonical_code(const Graph& g) {
  const int n = g.order();
  const auto a = adjacency_matrix(g);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  const int total = n * (n - 1) / 2;
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    int idx = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i, ++idx) {
        if (a[order[i]][order[j]]) code |= std::uint64_t{1} << (total - 1 - idx);
      }
    }
    best = std::min(best, code);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

inline bool connected(int n, const std::vector<Edge>& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int parts = n;
  for (const Edge& e : edges) {
    const int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --parts;
    }
  }
  return parts == 1;
}

/// Canonical codes of all connected graphs on n labeled vertices, walking
/// every edge subset. n <= 6.
inline std::set<std::uint64_t> connected_classes_by_brute_force(int n) {
  std::vector<Edge> pairs;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::set<std::uint64_t> out;
  const int m = static_cast<int>(pairs.size());
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    std::vector<Edge> edges;
    for (int b = 0; b < m; ++b) {
      if (mask >> b & 1U) edges.push_back(pairs[b]);
    }
    if (!connected(n, edges)) continue;
    out.insert(brute_canonical_code(Graph::build(n, edges)));
  }
  return out;
}

/// Coefficients c_0..c_n of det(tI - M) by Faddeev-LeVerrier (c_n = 1).
inline std::vector<double> characteristic_polynomial(const std::vector<std::vector<double>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  std::vector<std::vector<double>> mk(n, std::vector<double>(n, 0.0));  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    // M_k = M * M_{k-1} + c_{n-k+1} I
    std::vector<std::vector<double>> next(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int t = 0; t < n; ++t) s += m[i][t] * mk[t][j];
        next[i][j] = s + (i == j ? c[n - k + 1] : 0.0);
      }
    }
    double trace = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int t = 0; t < n; ++t) trace += m[i][t] * next[t][i];
    }
    c[n - k] = -trace / k;
    mk = std::move(next);
  }
  return c;
}

inline double evaluate(const std::vector<double>& c, double t) {
  double v = 0.0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * t + c[i];
  return v;
}

/// Signless Laplacian as a dense double matrix.
inline std::vector<std::vector<double>> signless_laplacian(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<double>> q(n, std::vector<double>(n, 0.0));
  for (const Edge& e : g.edges()) {
    q[e.u][e.v] = q[e.v][e.u] = 1.0;
    q[e.u][e.u] += 1.0;
    q[e.v][e.v] += 1.0;
  }
  return q;
}

/// Cyclic Jacobi rotations; eigenvalues ascending.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const int n = static_cast<int>(a.size());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    }
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = a[i][i];
  std::sort(out.begin(), out.end());
  return out;
}

/// Least root of the characteristic polynomial of Q(g) by bisection on
/// [-1, lo_hi], where lo_hi brackets the first sign change from below.
inline double least_q_eigenvalue_by_bisection(const Graph& g) {
  const auto c = characteristic_polynomial(signless_laplacian(g));
  const int n = g.order();
  const double sign_low = (n % 2 == 0) ? 1.0 : -1.0;  // sign of p(t) as t -> -inf
  double lo = -1.0;
  double hi = lo;
  const double step = 1e-3;
  while (evaluate(c, hi) * sign_low > 0) hi += step;
  lo = hi - step;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (evaluate(c, mid) * sign_low > 0) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace oracle
