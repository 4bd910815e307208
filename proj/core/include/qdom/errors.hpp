#pragma once

#include <stdexcept>
#include <string>

namespace qdom {

/// Malformed graph input: self-loops, out-of-range ids, duplicate or missing edges.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition on the shape of the input graph does not hold
/// (disconnected, bipartite where an odd cycle is required, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive routine was asked to run beyond its documented order bound.
class BoundExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// The QL iteration did not converge within its per-eigenvalue cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A property that a proof guarantees was observed to fail at runtime.
/// `claim` names the guaranteed property (e.g. "claim-2-stitch-length").
class TheoremViolation : public std::runtime_error {
 public:
  TheoremViolation(std::string claim, const std::string& what)
      : std::runtime_error(claim + ": " + what), claim_(std::move(claim)) {}

  const std::string& claim() const noexcept { return claim_; }

 private:
  std::string claim_;
};

}  // namespace qdom
