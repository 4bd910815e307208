#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdom/graph.hpp"
#include "qdom/report.hpp"

namespace qdom {

/// Parameters for a claim sweep. Unset fields fall back to per-claim defaults.
struct ClaimBounds {
  std::optional<int> max_n;
  std::optional<int> n;
  std::optional<int> gamma;
  std::optional<int> s;
  std::optional<int> k;
  std::optional<int> trials;
  std::uint64_t seed = 0;
  int jobs = 1;
  /// Adds the slow tiers (n = 8 exhaustive sweeps).
  bool extended = false;
};

class UnknownClaim : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Claim ids in campaign order.
const std::vector<std::string>& claim_ids();

/// Throws UnknownClaim for ids not in claim_ids().
VerificationReport run_claim(const std::string& id, const ClaimBounds& bounds = {});

/// Nine-vertex graph with odd girth 5, girth 4 and domination number 3, used
/// as the worked extraction example. Edges (0-based): 0-1 0-4 0-7 0-8 1-2
/// 1-5 2-3 3-4 3-6 4-5 6-7.
Graph extraction_example_graph();

/// The minimum dominating set {0, 3, 5} quoted for that graph.
std::vector<Vertex> extraction_example_dominating_set();

/// gamma by trying every subset in order of size. Order <= 20.
int brute_force_domination_number(const Graph& g);

}  // namespace qdom
