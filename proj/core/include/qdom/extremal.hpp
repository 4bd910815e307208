#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdom/graph.hpp"
#include "qdom/report.hpp"

namespace qdom {

/// C*_{s,l} of order n: odd cycle C_s, a path of length l leaving cycle
/// vertex 0, and n - s - l pendant edges at the far end of the path.
struct CStarParams {
  int n = 0;
  int s = 3;
  int l = 0;

  int pendants() const noexcept { return n - s - l; }
  /// s odd and >= 3, l >= 0, at least one pendant.
  bool valid() const noexcept;
  void validate() const;  // throws std::invalid_argument
  bool operator==(const CStarParams&) const = default;
};

std::string describe(const CStarParams& p);

/// Labels (0-based): cycle 0..s-1 in order, path s..s+l-1 starting next to
/// vertex 0, pendants s+l..n-1 on the path end (vertex 0 when l = 0).
Graph construct_c_star(const CStarParams& p);

/// Vertex of C*_{s,l} carrying the pendants.
Vertex c_star_hub(const CStarParams& p);

/// Rooted tree for cycle attachment; vertex `root` is identified with the
/// cycle vertex.
struct RootedTree {
  int order = 2;
  std::vector<Edge> edges;
  Vertex root = 0;
};

struct TreeAttachment {
  int position = 1;  // 1-based cycle position
  RootedTree tree;
};

/// Odd cycle v1..vk (labels 0..k-1) with each tree's root identified with
/// its cycle position. Non-root tree vertices follow in attachment order,
/// each tree's vertices in increasing id. Throws std::invalid_argument for
/// even/short cycles, bad positions, trivial or malformed trees.
Graph construct_cycle_trees(int k, const std::vector<TreeAttachment>& attachments);

/// ceil((l + 3) / 3), the domination number of C*_{3,l}.
int gamma_c_star_3(int l);

/// gamma(C*_{s,l}) is nondecreasing in l at fixed (s, n). Requires 3 <= s <= n-2.
VerificationReport gamma_monotone_in_l_check(int s, int n);

/// gamma(C*_{3,l+k-1}) <= gamma(C*_{2k+1,l}) at order n. Requires k >= 2 and
/// both graphs realizable.
VerificationReport gamma_cycle_shrink_check(int k, int l, int n);

/// Relocation of every pendant at `from` onto `to`.
struct PendantMove {
  Vertex from = 0;
  Vertex to = 0;
  std::vector<Vertex> pendants;
  int gamma_after = 0;
};

struct Reduction {
  Graph result;
  CStarParams params;
  /// C*_{s,l'} reached once a single pendant neighbor remains (s may exceed 3).
  CStarParams intermediate;
  std::vector<PendantMove> moves;
  int gamma_input = 0;
  int gamma_result = 0;
  /// Whether gamma_result == gamma_input (only <= is certified).
  bool equal_gamma = false;
  std::vector<std::string> notes;
};

/// Pendant-collapsing reduction of a connected unicyclic nonbipartite graph
/// to a C*_{3,l} of the same order with no larger domination number.
/// Returns g itself when it already has C*_{3,l} shape.
/// Throws PreconditionError on other inputs, TheoremViolation if gamma grows.
Reduction reduce_to_cstar(const Graph& g);

/// Structural recognition: (s, l) when g has C*_{s,l} shape.
std::optional<CStarParams> recognize_c_star(const Graph& g);

}  // namespace qdom
