#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdom/graph.hpp"

namespace qdom {

enum class Outcome { pass, inconclusive, fail };

std::string_view to_string(Outcome o) noexcept;

struct Witness {
  std::string label;
  Graph graph;
  std::optional<double> value;
  std::string note;
};

/// Machine-readable outcome of one claim check.
///
/// Margins whose key starts with "min_" merge by minimum, everything else by
/// maximum; counts add up. Merging is associative, so sharded sweeps can be
/// combined in any grouping.
struct VerificationReport {
  std::string claim;
  std::map<std::string, std::string> scope;
  Outcome outcome = Outcome::pass;
  std::vector<Witness> witnesses;
  std::map<std::string, double> margins;
  std::map<std::string, long long> counts;
  std::vector<std::string> notes;

  bool passed() const noexcept { return outcome == Outcome::pass; }

  /// Marks the report failed; a failure always carries its counterexample.
  void fail(std::string label, Graph counterexample, std::string note,
            std::optional<double> value = std::nullopt);
  void mark_inconclusive(std::string note);

  void witness(std::string label, Graph g, std::optional<double> value = std::nullopt,
               std::string note = {});

  void record_min(const std::string& key, double value);
  void record_max(const std::string& key, double value);
  void count(const std::string& key, long long by = 1) { counts[key] += by; }

  void merge(const VerificationReport& other);
};

}  // namespace qdom
