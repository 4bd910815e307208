#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "qdom/graph.hpp"

namespace qdom {

/// Edge-list parse failure; `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Reads the edge-list format:
///
///     # comment
///     p <n>
///     <u> <v>
///     ...
///
/// Ids are 0-based. Blank lines are ignored. Graph-level violations
/// (self-loop, duplicate edge, bad id) are reported as ParseError on the
/// offending line.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
Graph parse_edge_list(const std::string& text);

std::string to_edge_list(const Graph& g);
std::string to_dot(const Graph& g);

}  // namespace qdom
