#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qdom/graph.hpp"
#include "qdom/report.hpp"

namespace qdom {

inline constexpr int kMaxCanonicalOrder = 11;
inline constexpr int kMaxGeneralEnumerationOrder = 8;
inline constexpr int kMaxUnicyclicEnumerationOrder = 10;

/// Isomorphism-class representative. Vertices are first split into stable
/// color-refinement classes, which occupy consecutive positions in class
/// order. `form` is the least upper-triangle adjacency bitstring over the
/// orderings that respect those classes, pairs taken column by column
/// ((0,1), (0,2), (1,2), (0,3), ...) with the first pair as the most
/// significant bit. `graph` is g relabeled into that ordering.
struct CanonicalGraph {
  std::uint64_t form = 0;
  Graph graph;

  bool operator==(const CanonicalGraph& o) const noexcept {
    return form == o.form && graph.order() == o.graph.order();
  }
};

/// Throws BoundExceeded for order > 11.
CanonicalGraph canonical_form(const Graph& g);

/// The adjacency bitstring of g under its current labeling.
std::uint64_t adjacency_code(const Graph& g);

struct EnumerationFilter {
  bool nonbipartite = false;
  bool unicyclic = false;
  std::optional<int> gamma;
};

/// One representative per isomorphism class of connected graphs of order n
/// passing the filter, ascending by form. n <= 8, or n <= 10 when the
/// filter asks for unicyclic graphs. `jobs` threads share the work; the
/// output does not depend on it.
std::vector<CanonicalGraph> enumerate_connected(int n, const EnumerationFilter& filter = {},
                                                int jobs = 1);

/// Every connected nonbipartite class with n <= max_n satisfies n >= 3*gamma - 1,
/// plus the tight case C*_{3,1}. max_n <= 8.
VerificationReport verify_order_bound(int max_n, int jobs = 1);

/// The C*_{3,l} predicted to minimize q_min at (n, gamma):
/// l = n - 4 when n <= 3*gamma + 1, otherwise l = 3*gamma - 3.
/// Throws PreconditionError unless n >= 4 and n >= 3*gamma - 1.
Graph predicted_minimizer(int n, int gamma);

/// Unique q_min minimizer over unicyclic nonbipartite classes with order n and
/// domination number gamma equals predicted_minimizer(n, gamma). n <= 10.
VerificationReport verify_unicyclic_minimizer(int n, int gamma, int jobs = 1);

/// Same over every connected nonbipartite class. n <= 8.
VerificationReport verify_global_minimizer(int n, int gamma, int jobs = 1);

}  // namespace qdom
