#include "qdom/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "qdom/errors.hpp"

namespace qdom {

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    if (n < 0) {
      std::string tag;
      long long value = 0;
      if (!(fields >> tag >> value) || tag != "p") {
        throw ParseError(line_no, "expected header 'p <n>'");
      }
      std::string extra;
      if (fields >> extra) throw ParseError(line_no, "trailing data after header");
      if (value < 1 || value > 1'000'000) throw ParseError(line_no, "order out of range");
      n = static_cast<int>(value);
      continue;
    }
    long long u = 0, v = 0;
    if (!(fields >> u >> v)) throw ParseError(line_no, "expected '<u> <v>'");
    std::string extra;
    if (fields >> extra) throw ParseError(line_no, "trailing data after edge");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(line_no, "vertex id out of range");
    if (u == v) throw ParseError(line_no, "self-loop");
    const Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen.insert(e).second) throw ParseError(line_no, "duplicate edge");
    edges.push_back(e);
  }
  if (n < 0) throw ParseError(line_no + 1, "missing header 'p <n>'");
  return Graph::build(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) out << "  " << v << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace qdom
