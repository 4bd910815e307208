#include "qdom/report.hpp"

#include <algorithm>

namespace qdom {

std::string_view to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::pass:
      return "pass";
    case Outcome::inconclusive:
      return "inconclusive";
    case Outcome::fail:
      return "fail";
  }
  return "unknown";
}

void VerificationReport::fail(std::string label, Graph counterexample, std::string note,
                              std::optional<double> value) {
  outcome = Outcome::fail;
  witnesses.push_back({std::move(label), std::move(counterexample), value, std::move(note)});
}

void VerificationReport::mark_inconclusive(std::string note) {
  if (outcome == Outcome::pass) outcome = Outcome::inconclusive;
  notes.push_back(std::move(note));
}

void VerificationReport::witness(std::string label, Graph g, std::optional<double> value,
                                 std::string note) {
  witnesses.push_back({std::move(label), std::move(g), value, std::move(note)});
}

void VerificationReport::record_min(const std::string& key, double value) {
  auto [it, inserted] = margins.emplace(key, value);
  if (!inserted) it->second = std::min(it->second, value);
}

void VerificationReport::record_max(const std::string& key, double value) {
  auto [it, inserted] = margins.emplace(key, value);
  if (!inserted) it->second = std::max(it->second, value);
}

void VerificationReport::merge(const VerificationReport& other) {
  outcome = std::max(outcome, other.outcome);
  witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  for (const auto& [k, v] : other.counts) counts[k] += v;
  for (const auto& [k, v] : other.margins) {
    if (k.rfind("min_", 0) == 0) {
      record_min(k, v);
    } else {
      record_max(k, v);
    }
  }
  for (const auto& [k, v] : other.scope) scope.emplace(k, v);
}

}  // namespace qdom
