#include <gtest/gtest.h>

#include "frogcolor/dimacs.hpp"
#include "frogcolor/generators.hpp"
#include "test_support.hpp"

using namespace frogcolor;

TEST(Dimacs, MinimalPath) {
  const Graph g = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3");
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 2));
}

TEST(Dimacs, DuplicateOrientationCollapses) {
  const Graph g = parse_dimacs("p edge 2 2\ne 1 2\ne 2 1");
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(Dimacs, CommentsBlankLinesAndColKeyword) {
  const Graph g = parse_dimacs("c header\n\nc more\np col 4 1\r\ne 4 1\r\n");
  EXPECT_EQ(g.size(), 4u);
  EXPECT_TRUE(g.has_edge(0, 3));
}

TEST(Dimacs, Myciel3File) {
  const Graph g = load_dimacs(FROGCOLOR_TEST_DATA "/myciel3.col");
  EXPECT_EQ(g.size(), 11u);
  EXPECT_EQ(g.max_degree(), 5u);
  EXPECT_EQ(g.edge_count(), 20u);
  EXPECT_TRUE(oracle::well_formed(g));
}

namespace {

std::size_t error_line(const std::string& text) {
  try {
    parse_dimacs(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(Dimacs, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("c only comments\n"), 1u);
  EXPECT_EQ(error_line("p edge 2 1\np edge 2 1\n"), 2u);
  EXPECT_EQ(error_line("p edge 2 1\ne 1 3\n"), 2u);
  EXPECT_EQ(error_line("p edge 2 1\ne 0 1\n"), 2u);
  EXPECT_EQ(error_line("c x\np edge 2 1\ne 1 b\n"), 3u);
  EXPECT_EQ(error_line("p edge two 1\n"), 1u);
  EXPECT_EQ(error_line("e 1 2\np edge 2 1\n"), 1u);
  EXPECT_EQ(error_line("p edge 2 1\nx 1 2\n"), 2u);
  EXPECT_EQ(error_line("p edge 2 1\ne 1 2 3\n"), 2u);
  EXPECT_EQ(error_line("p edge 2 1\ne 2 2\n"), 2u);
  EXPECT_EQ(error_line("p edge 2 1\ne -1 2\n"), 2u);
}

TEST(Dimacs, MissingFileThrows) {
  EXPECT_THROW(load_dimacs("/nonexistent/graph.col"), std::runtime_error);
}

TEST(Dimacs, RoundTripReproducesGraph) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = oracle::random_graph(1 + seed * 3, 0.15, seed, false);
    EXPECT_EQ(parse_dimacs(to_dimacs(g)), g) << "seed " << seed;
  }
  for (const Graph& g : {gen_grid(5, 4, true), gen_mycielski(5), gen_queen(6, 6)}) {
    EXPECT_EQ(parse_dimacs(to_dimacs(g)), g);
  }
}
