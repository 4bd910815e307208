#pragma once

#include <span>
#include <string>
#include <vector>

#include "qdom/graph.hpp"
#include "qdom/report.hpp"

namespace qdom {

/// Dense symmetric matrix. Writes go through set(), which mirrors the entry,
/// so the stored matrix is exactly symmetric.
class SymMatrix {
 public:
  explicit SymMatrix(int order) : n_(order), a_(static_cast<std::size_t>(order) * order, 0.0) {}

  int order() const noexcept { return n_; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  void set(int i, int j, double value) {
    a_[static_cast<std::size_t>(i) * n_ + j] = value;
    a_[static_cast<std::size_t>(j) * n_ + i] = value;
  }

  double inf_norm() const;
  double trace() const;
  std::vector<double> multiply(std::span<const double> x) const;

 private:
  int n_;
  std::vector<double> a_;
};

/// Q(G) = D(G) + A(G).
SymMatrix signless_laplacian(const Graph& g);

/// Eigenvalues in ascending order with orthonormal eigenvectors
/// (vectors[i] belongs to values[i]).
struct Eigensystem {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
};

/// Householder tridiagonalization followed by the implicitly shifted QL
/// iteration. Throws ConvergenceError when one eigenvalue needs more than
/// kMaxQlIterations sweeps.
Eigensystem symmetric_eigensystem(const SymMatrix& a);

inline constexpr int kMaxQlIterations = 64;
inline constexpr int kMaxDenseOrder = 64;

/// All Q-eigenvalues, descending (q_1 >= ... >= q_n). Order <= 64.
std::vector<double> full_q_spectrum(const Graph& g);

/// Least Q-eigenvalue with a unit eigenvector. The first coordinate with
/// magnitude above 1e-9 is positive. `gap` is q_{n-1} - q_n (infinity when n = 1).
struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;
  double gap = 0.0;
};

/// Residual, trace and norm bookkeeping across every decomposition it sees.
struct SpectralAudit {
  /// max ||Qv - lv||_2 / max(1, ||Q||_inf) over all eigenpairs observed.
  double max_residual_ratio = 0.0;
  /// max |sum(eigenvalues) - sum(degrees)|.
  double max_trace_error = 0.0;
  double max_norm_error = 0.0;
  long long decompositions = 0;

  void observe(const SymMatrix& q, const Eigensystem& es);
  void merge(const SpectralAudit& other);
  /// Copies the audit figures into report margins.
  void export_to(VerificationReport& report) const;
};

/// Throws PreconditionError for disconnected graphs.
EigenPair least_q_eigenpair(const Graph& g, SpectralAudit* audit = nullptr);

/// sum over edges uv of (x(u) + x(v))^2. Throws std::invalid_argument on size mismatch.
double rayleigh(const Graph& g, std::span<const double> x);
double quadratic_form(const SymMatrix& a, std::span<const double> x);
double residual_norm(const SymMatrix& a, double value, std::span<const double> v);

inline constexpr double kZeroCoordinate = 1e-8;
inline constexpr double kMinSpectralGap = 1e-7;
inline constexpr double kStrictMargin = 1e-10;
inline constexpr double kInterlaceSlack = 1e-8;

/// Edge-deletion interlacing: 0 <= s_n <= q_n <= s_{n-1} <= ... <= s_1 <= q_1.
VerificationReport interlacing_check(const Graph& g, Edge e, SpectralAudit* audit = nullptr);

enum class BranchKind { zero, nonzero };

/// One branch H = G[K + root] for a component K of G - root.
struct BranchClassification {
  Vertex root = 0;
  std::vector<Vertex> vertices;  // excludes the root
  BranchKind kind = BranchKind::zero;
  bool bipartite = false;
  bool tree = false;
  /// Whether the eigenvector pattern on this branch is the one predicted for
  /// bipartite branches (all-zero, or nonzero with signs alternating across
  /// the bipartition). Always true for non-bipartite branches.
  bool consistent = true;
};

struct BranchAnalysis {
  Outcome outcome = Outcome::pass;
  std::vector<BranchClassification> branches;
};

/// Splits g at `root` and classifies every branch against the eigenvector.
/// Outcome is inconclusive when pair.gap < kMinSpectralGap, fail when some
/// bipartite branch is inconsistent.
BranchAnalysis classify_branches(const Graph& g, const EigenPair& pair, Vertex root);

/// For every nonzero tree branch at `root`: |x| strictly increases
/// (by more than kStrictMargin) along every path leaving the root.
/// Requires g connected and nonbipartite.
VerificationReport tree_monotonicity_check(const Graph& g, const EigenPair& pair, Vertex root);

/// max |x(r)| over the given roots exceeds kZeroCoordinate.
VerificationReport root_nonzero_check(const Graph& g, const EigenPair& pair,
                                      std::span<const Vertex> roots);

/// Re-attaches every pendant vertex hanging at `from` to `to`.
/// Throws PreconditionError when `from` has no pendant, `to == from`, or
/// `to` is itself one of those pendants.
Graph pendant_shift(const Graph& g, Vertex from, Vertex to);

/// Moving the pendants of `from` to a vertex with larger |x| lowers kappa.
/// Inconclusive when the eigenvector does not meet the hypothesis.
VerificationReport pendant_shift_check(const Graph& g, Vertex from, Vertex to,
                                       SpectralAudit* audit = nullptr);

}  // namespace qdom
