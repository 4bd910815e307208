#include <gtest/gtest.h>

#include "qdom/graph_io.hpp"

using namespace qdom;

TEST(EdgeList, ParsesCommentsAndBlankLines) {
  const Graph g = parse_edge_list("# triangle\n\np 3\n0 1\n  1 2 \n# tail\n2 0\n");
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 3);
}

TEST(EdgeList, RoundTrip) {
  const Graph g = Graph::build(5, {{0, 1}, {1, 2}, {3, 4}});
  EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("p 3\n0 1\n1 1\n"), 3);
  EXPECT_EQ(line_of("p 3\n0 5\n"), 2);
  EXPECT_EQ(line_of("p 3\n0 1\n1 0\n"), 3);
  EXPECT_EQ(line_of("p 3\n0 1 2\n"), 2);
  EXPECT_EQ(line_of("0 1\n"), 1);
  EXPECT_EQ(line_of("p 3\nzero one\n"), 2);
  EXPECT_EQ(line_of("# nothing\n"), 2);
}

TEST(Dot, ListsIsolatedVerticesAndEdges) {
  const Graph g = Graph::build(3, {{0, 1}});
  EXPECT_EQ(to_dot(g), "graph {\n  2;\n  0 -- 1;\n}\n");
}
