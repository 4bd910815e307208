#include "qdom/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

#include "qdom/errors.hpp"

namespace qdom {
namespace {

// Householder reduction of the symmetric matrix held in v (row-major n x n)
// to tridiagonal form: diagonal d, subdiagonal e[1..n-1]. On exit v holds the
// accumulated orthogonal transformation.
void tridiagonalize(int n, std::vector<double>& v, std::vector<double>& d,
                    std::vector<double>& e) {
  auto V = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(i) * n + j]; };

  for (int j = 0; j < n; ++j) d[j] = V(n - 1, j);

  for (int i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (int k = 0; k < i; ++k) scale += std::abs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (int j = 0; j < i; ++j) {
        d[j] = V(i - 1, j);
        V(i, j) = 0.0;
        V(j, i) = 0.0;
      }
    } else {
      for (int k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (int j = 0; j < i; ++j) e[j] = 0.0;

      for (int j = 0; j < i; ++j) {
        f = d[j];
        V(j, i) = f;
        g = e[j] + V(j, j) * f;
        for (int k = j + 1; k <= i - 1; ++k) {
          g += V(k, j) * d[k];
          e[k] += V(k, j) * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (int j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const double hh = f / (h + h);
      for (int j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (int j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (int k = j; k <= i - 1; ++k) V(k, j) -= (f * e[k] + g * d[k]);
        d[j] = V(i - 1, j);
        V(i, j) = 0.0;
      }
    }
    d[i] = h;
  }

  // Accumulate transformations.
  for (int i = 0; i < n - 1; ++i) {
    V(n - 1, i) = V(i, i);
    V(i, i) = 1.0;
    const double h = d[i + 1];
    if (h != 0.0) {
      for (int k = 0; k <= i; ++k) d[k] = V(k, i + 1) / h;
      for (int j = 0; j <= i; ++j) {
        double g = 0.0;
        for (int k = 0; k <= i; ++k) g += V(k, i + 1) * V(k, j);
        for (int k = 0; k <= i; ++k) V(k, j) -= g * d[k];
      }
    }
    for (int k = 0; k <= i; ++k) V(k, i + 1) = 0.0;
  }
  for (int j = 0; j < n; ++j) {
    d[j] = V(n - 1, j);
    V(n - 1, j) = 0.0;
  }
  V(n - 1, n - 1) = 1.0;
  e[0] = 0.0;
}

// Implicit QL with shifts on the tridiagonal (d, e), updating the
// eigenvector matrix v in place.
void ql_iterate(int n, std::vector<double>& v, std::vector<double>& d, std::vector<double>& e) {
  auto V = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(i) * n + j]; };

  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  double f = 0.0;
  double tst1 = 0.0;
  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    int m = l;
    while (m < n) {
      if (std::abs(e[m]) <= eps * tst1) break;
      ++m;
    }
    if (m > l) {
      int iter = 0;
      do {
        if (++iter > kMaxQlIterations) {
          throw ConvergenceError("QL iteration did not converge for eigenvalue " +
                                 std::to_string(l));
        }
        // Shift from the leading 2x2 block.
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (int i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (int i = m - 1; i >= l; --i) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          for (int k = 0; k < n; ++k) {
            h = V(k, i + 1);
            V(k, i + 1) = s * V(k, i) + c * h;
            V(k, i) = c * V(k, i) - s * h;
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

void normalize_sign(std::vector<double>& x) {
  for (double xi : x) {
    if (std::abs(xi) > 1e-9) {
      if (xi < 0) {
        for (double& y : x) y = -y;
      }
      return;
    }
  }
}

// Components of g - root, each sorted.
std::vector<std::vector<Vertex>> components_without(const Graph& g, Vertex root) {
  std::vector<int> comp(g.order(), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (s == root || comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<Vertex> q;
    comp[s] = id;
    q.push(s);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      out[id].push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (w != root && comp[w] < 0) {
          comp[w] = id;
          q.push(w);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

}  // namespace

double SymMatrix::inf_norm() const {
  double best = 0.0;
  for (int i = 0; i < n_; ++i) {
    double row = 0.0;
    for (int j = 0; j < n_; ++j) row += std::abs((*this)(i, j));
    best = std::max(best, row);
  }
  return best;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

std::vector<double> SymMatrix::multiply(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("dimension mismatch");
  std::vector<double> y(n_, 0.0);
  for (int i = 0; i < n_; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n_; ++j) acc += (*this)(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

SymMatrix signless_laplacian(const Graph& g) {
  SymMatrix q(g.order());
  for (Vertex v = 0; v < g.order(); ++v) q.set(v, v, g.degree(v));
  for (const Edge& e : g.edges()) q.set(e.u, e.v, 1.0);
  return q;
}

Eigensystem symmetric_eigensystem(const SymMatrix& a) {
  const int n = a.order();
  Eigensystem out;
  if (n == 0) return out;
  if (n == 1) {
    out.values = {a(0, 0)};
    out.vectors = {{1.0}};
    return out;
  }
  std::vector<double> v(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(i) * n + j] = a(i, j);
  std::vector<double> d(n), e(n);
  tridiagonalize(n, v, d, e);
  ql_iterate(n, v, d, e);

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return d[x] < d[y]; });
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (int k : idx) {
    out.values.push_back(d[k]);
    std::vector<double> col(n);
    for (int i = 0; i < n; ++i) col[i] = v[static_cast<std::size_t>(i) * n + k];
    out.vectors.push_back(std::move(col));
  }
  return out;
}

std::vector<double> full_q_spectrum(const Graph& g) {
  if (g.order() > kMaxDenseOrder) throw BoundExceeded("dense spectrum limited to order 64");
  auto values = symmetric_eigensystem(signless_laplacian(g)).values;
  std::reverse(values.begin(), values.end());
  return values;
}

void SpectralAudit::observe(const SymMatrix& q, const Eigensystem& es) {
  const double scale = std::max(1.0, q.inf_norm());
  double sum = 0.0;
  for (std::size_t i = 0; i < es.values.size(); ++i) {
    const auto& x = es.vectors[i];
    max_residual_ratio = std::max(max_residual_ratio, residual_norm(q, es.values[i], x) / scale);
    const double norm = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
    max_norm_error = std::max(max_norm_error, std::abs(norm - 1.0));
    sum += es.values[i];
  }
  max_trace_error = std::max(max_trace_error, std::abs(sum - q.trace()));
  ++decompositions;
}

void SpectralAudit::merge(const SpectralAudit& other) {
  max_residual_ratio = std::max(max_residual_ratio, other.max_residual_ratio);
  max_trace_error = std::max(max_trace_error, other.max_trace_error);
  max_norm_error = std::max(max_norm_error, other.max_norm_error);
  decompositions += other.decompositions;
}

void SpectralAudit::export_to(VerificationReport& report) const {
  if (decompositions == 0) return;
  report.record_max("max_eigen_residual_ratio", max_residual_ratio);
  report.record_max("max_trace_error", max_trace_error);
  report.record_max("max_eigenvector_norm_error", max_norm_error);
  report.count("eigendecompositions", decompositions);
}

EigenPair least_q_eigenpair(const Graph& g, SpectralAudit* audit) {
  if (!is_connected(g)) throw PreconditionError("least_q_eigenpair requires a connected graph");
  if (g.order() > kMaxDenseOrder) throw BoundExceeded("dense spectrum limited to order 64");
  const SymMatrix q = signless_laplacian(g);
  Eigensystem es = symmetric_eigensystem(q);
  if (audit != nullptr) audit->observe(q, es);
  EigenPair pair;
  pair.value = es.values.front();
  pair.vector = std::move(es.vectors.front());
  pair.gap = es.values.size() > 1 ? es.values[1] - es.values[0]
                                  : std::numeric_limits<double>::infinity();
  normalize_sign(pair.vector);
  return pair;
}

double rayleigh(const Graph& g, std::span<const double> x) {
  if (static_cast<int>(x.size()) != g.order()) throw std::invalid_argument("vector length mismatch");
  double sum = 0.0;
  for (const Edge& e : g.edges()) {
    const double s = x[e.u] + x[e.v];
    sum += s * s;
  }
  return sum;
}

double quadratic_form(const SymMatrix& a, std::span<const double> x) {
  const auto ax = a.multiply(x);
  return std::inner_product(ax.begin(), ax.end(), x.begin(), 0.0);
}

double residual_norm(const SymMatrix& a, double value, std::span<const double> v) {
  const auto av = a.multiply(v);
  double sq = 0.0;
  for (std::size_t i = 0; i < av.size(); ++i) {
    const double r = av[i] - value * v[i];
    sq += r * r;
  }
  return std::sqrt(sq);
}

VerificationReport interlacing_check(const Graph& g, Edge e, SpectralAudit* audit) {
  VerificationReport report;
  report.claim = "lemma-2.1";
  const Edge removed[] = {e};
  const Graph h = delete_edges(g, removed);

  auto spectrum = [&](const Graph& x) {
    const SymMatrix q = signless_laplacian(x);
    auto es = symmetric_eigensystem(q);
    if (audit != nullptr) audit->observe(q, es);
    auto values = es.values;
    std::reverse(values.begin(), values.end());
    return values;
  };
  const auto q = spectrum(g);
  const auto s = spectrum(h);
  const int n = g.order();

  // Chain from the bottom: 0 <= s_n <= q_n <= s_{n-1} <= ... <= s_1 <= q_1.
  std::vector<double> chain{0.0};
  for (int i = n - 1; i >= 0; --i) {
    chain.push_back(s[i]);
    chain.push_back(q[i]);
  }
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    worst = std::min(worst, chain[i + 1] - chain[i]);
  }
  report.record_min("min_chain_step", worst);
  if (worst < -kInterlaceSlack) {
    std::ostringstream note;
    note << "interlacing broken by " << -worst << " after deleting " << e.u << "-" << e.v;
    report.fail("graph", g, note.str(), worst);
  }
  return report;
}

BranchAnalysis classify_branches(const Graph& g, const EigenPair& pair, Vertex root) {
  if (static_cast<int>(pair.vector.size()) != g.order()) {
    throw std::invalid_argument("eigenvector length mismatch");
  }
  BranchAnalysis out;
  const auto& x = pair.vector;
  const double xr = x.at(root);
  for (auto& comp : components_without(g, root)) {
    BranchClassification b;
    b.root = root;
    std::vector<Vertex> members = comp;
    members.push_back(root);
    std::sort(members.begin(), members.end());
    const Graph h = induced_subgraph(g, members);
    const auto bp = bipartition(h);
    b.bipartite = bp.bipartite;
    b.tree = is_tree(h);
    const bool all_zero = std::all_of(comp.begin(), comp.end(),
                                      [&](Vertex v) { return std::abs(x[v]) <= kZeroCoordinate; });
    b.kind = (all_zero && std::abs(xr) <= kZeroCoordinate) ? BranchKind::zero : BranchKind::nonzero;

    if (b.bipartite) {
      if (std::abs(xr) <= kZeroCoordinate) {
        b.consistent = all_zero;
      } else {
        const int root_index = static_cast<int>(
            std::lower_bound(members.begin(), members.end(), root) - members.begin());
        const int root_side = bp.side[root_index];
        for (std::size_t i = 0; i < members.size(); ++i) {
          const Vertex p = members[i];
          if (p == root) continue;
          const double prod = x[p] * xr;
          const bool same_side = bp.side[i] == root_side;
          if (std::abs(x[p]) <= kZeroCoordinate || (same_side ? prod <= 0 : prod >= 0)) {
            b.consistent = false;
            break;
          }
        }
      }
    }
    b.vertices = std::move(comp);
    if (!b.consistent) out.outcome = Outcome::fail;
    out.branches.push_back(std::move(b));
  }
  if (pair.gap < kMinSpectralGap) out.outcome = Outcome::inconclusive;
  return out;
}

VerificationReport tree_monotonicity_check(const Graph& g, const EigenPair& pair, Vertex root) {
  if (!is_connected(g) || is_bipartite(g)) {
    throw PreconditionError("tree monotonicity applies to connected nonbipartite graphs");
  }
  VerificationReport report;
  report.claim = "lemma-2.3";
  report.scope["root"] = std::to_string(root);
  if (pair.gap < kMinSpectralGap) {
    report.mark_inconclusive("least eigenvalue not simple (gap " + std::to_string(pair.gap) + ")");
    return report;
  }
  const auto& x = pair.vector;
  int checked = 0;
  for (const auto& comp : components_without(g, root)) {
    std::vector<Vertex> members = comp;
    members.push_back(root);
    std::sort(members.begin(), members.end());
    if (!is_tree(induced_subgraph(g, members))) continue;
    const bool zero = std::abs(x[root]) <= kZeroCoordinate &&
                      std::all_of(comp.begin(), comp.end(),
                                  [&](Vertex v) { return std::abs(x[v]) <= kZeroCoordinate; });
    if (zero) continue;
    ++checked;
    // Walk the branch outward from the root; each step must grow |x|.
    std::vector<char> in_branch(g.order(), 0);
    for (Vertex v : comp) in_branch[v] = 1;
    std::vector<Vertex> stack{root};
    std::vector<char> seen(g.order(), 0);
    seen[root] = 1;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (!in_branch[w] || seen[w]) continue;
        seen[w] = 1;
        stack.push_back(w);
        const double step = std::abs(x[w]) - std::abs(x[u]);
        report.record_min("min_abs_increase", step);
        if (step <= -kStrictMargin) {
          report.fail("graph", g,
                      "|x| decreases from " + std::to_string(u) + " to " + std::to_string(w), step);
        } else if (step <= kStrictMargin) {
          report.mark_inconclusive("increase within margin from " + std::to_string(u) + " to " +
                                   std::to_string(w));
        }
      }
    }
  }
  report.count("tree_branches_checked", checked);
  if (checked == 0) report.mark_inconclusive("no nonzero tree branch at root");
  return report;
}

VerificationReport root_nonzero_check(const Graph& g, const EigenPair& pair,
                                      std::span<const Vertex> roots) {
  VerificationReport report;
  report.claim = "lemma-2.5";
  double best = 0.0;
  for (Vertex r : roots) best = std::max(best, std::abs(pair.vector.at(r)));
  report.record_min("min_max_root_abs", best);
  if (best <= kZeroCoordinate) report.fail("graph", g, "all attachment roots vanish", best);
  return report;
}

Graph pendant_shift(const Graph& g, Vertex from, Vertex to) {
  if (!g.contains(from) || !g.contains(to)) throw GraphError("vertex out of range");
  if (from == to) throw PreconditionError("pendant_shift needs distinct vertices");
  std::vector<Vertex> pendants;
  for (Vertex w : g.neighbors(from)) {
    if (g.degree(w) == 1) pendants.push_back(w);
  }
  if (pendants.empty()) throw PreconditionError("no pendant vertex at " + std::to_string(from));
  if (std::find(pendants.begin(), pendants.end(), to) != pendants.end()) {
    throw PreconditionError("target is a pendant of the source");
  }
  std::vector<Edge> removed, added;
  for (Vertex p : pendants) {
    removed.emplace_back(from, p);
    added.emplace_back(to, p);
  }
  return add_edges(delete_edges(g, removed), added);
}

VerificationReport pendant_shift_check(const Graph& g, Vertex from, Vertex to,
                                       SpectralAudit* audit) {
  VerificationReport report;
  report.claim = "lemma-2.4";
  const Graph shifted = pendant_shift(g, from, to);
  const EigenPair before = least_q_eigenpair(g, audit);
  const double xf = std::abs(before.vector[from]);
  const double xt = std::abs(before.vector[to]);
  const bool hypothesis =
      xt > xf + kStrictMargin || (std::abs(xt - xf) <= kStrictMargin && xt > kZeroCoordinate);
  if (!hypothesis) {
    report.mark_inconclusive("hypothesis |x(to)| >= |x(from)| > 0 not met");
    return report;
  }
  const EigenPair after = least_q_eigenpair(shifted, audit);
  const double drop = before.value - after.value;
  report.record_min("min_kappa_drop", drop);
  if (drop <= kStrictMargin) {
    report.fail("graph", g, "kappa did not decrease after moving pendants", drop);
  }
  return report;
}

}  // namespace qdom
