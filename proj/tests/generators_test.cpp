#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "frogcolor/dimacs.hpp"
#include "frogcolor/generators.hpp"
#include "test_support.hpp"

using namespace frogcolor;

namespace {

// All-pairs distance predicate over the generator's own points.
std::vector<Edge> brute_force_edges(const std::vector<Point>& pts, double r) {
  std::vector<Edge> out;
  for (NodeId i = 0; i < pts.size(); ++i) {
    for (NodeId j = i + 1; j < pts.size(); ++j) {
      const double dx = pts[i].x - pts[j].x;
      const double dy = pts[i].y - pts[j].y;
      if (dx * dx + dy * dy <= r * r) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace

TEST(Geometric, SingleNodeHasNoEdges) {
  const Graph g = gen_random_geometric(1, 0.05, 99);
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(Geometric, RadiusBoundsRejected) {
  EXPECT_THROW(gen_random_geometric(2, std::sqrt(2.0) + 1e-9, 1), std::invalid_argument);
  EXPECT_THROW(gen_random_geometric(2, 1.5, 1), std::invalid_argument);
  EXPECT_THROW(gen_random_geometric(2, 0.0, 1), std::invalid_argument);
  EXPECT_THROW(gen_random_geometric(0, 0.1, 1), std::invalid_argument);
  EXPECT_NO_THROW(gen_random_geometric(2, std::sqrt(2.0), 1));
}

TEST(Geometric, EdgeSetMatchesPairwiseOracle) {
  for (std::size_t n : {2u, 17u, 200u, 500u}) {
    for (double r : {0.05, 0.1, 0.3, 1.0}) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto gg = gen_random_geometric_with_points(n, r, seed);
        for (const auto& p : gg.points) {
          ASSERT_GE(p.x, 0.0);
          ASSERT_LT(p.x, 1.0);
          ASSERT_GE(p.y, 0.0);
          ASSERT_LT(p.y, 1.0);
        }
        ASSERT_EQ(gg.graph.edges(), brute_force_edges(gg.points, r)) << n << " " << r << " " << seed;
        ASSERT_TRUE(oracle::well_formed(gg.graph));
      }
    }
  }
}

TEST(Geometric, SparseAtSmallRadius) {
  const Graph g = gen_random_geometric(200, 0.05, 3);
  EXPECT_LE(g.max_degree(), 17u);
}

TEST(Geometric, DeterministicPerSeed) {
  EXPECT_EQ(gen_random_geometric(100, 0.1, 5), gen_random_geometric(100, 0.1, 5));
  EXPECT_NE(gen_random_geometric(100, 0.1, 5), gen_random_geometric(100, 0.1, 6));
}

TEST(Grid, SizesAndColorability) {
  const Graph g21 = gen_grid(2, 1, false);
  EXPECT_EQ(g21.size(), 2u);
  EXPECT_EQ(g21.edge_count(), 1u);
  EXPECT_TRUE(oracle::colorable(g21, 2));
  EXPECT_FALSE(oracle::colorable(g21, 1));

  const Graph g99 = gen_grid(9, 9, false);
  EXPECT_EQ(g99.size(), 81u);
  EXPECT_EQ(g99.max_degree(), 4u);

  const Graph ising = gen_grid(32, 8, true);
  EXPECT_EQ(ising.size(), 256u);
  EXPECT_EQ(ising.max_degree(), 4u);
  EXPECT_EQ(ising.edge_count(), 512u);
  Coloring parity;
  for (NodeId v = 0; v < 256; ++v) parity.colors.push_back(1 + (v % 32 + v / 32) % 2);
  EXPECT_TRUE(is_valid(ising, parity));
}

TEST(Grid, ParityColoringValidForAllSizes) {
  for (std::size_t w = 1; w <= 12; ++w) {
    for (std::size_t h = 1; h <= 12; ++h) {
      const Graph g = gen_grid(w, h, false);
      ASSERT_TRUE(oracle::well_formed(g));
      ASSERT_EQ(g.edge_count(), (w - 1) * h + w * (h - 1));
      Coloring parity;
      for (NodeId v = 0; v < g.size(); ++v) parity.colors.push_back(1 + (v % w + v / w) % 2);
      ASSERT_TRUE(is_valid(g, parity)) << w << "x" << h;
    }
  }
}

TEST(Grid, TorusWrapCollapsesOnThinDimensions) {
  EXPECT_EQ(gen_grid(1, 1, true).edge_count(), 0u);
  EXPECT_EQ(gen_grid(2, 1, true).edge_count(), 1u);
  EXPECT_EQ(gen_grid(2, 2, true).edge_count(), 4u);
  EXPECT_EQ(gen_grid(3, 1, true).edge_count(), 3u);
  EXPECT_EQ(gen_grid(3, 3, true).edge_count(), 18u);
  for (std::size_t w = 1; w <= 6; ++w) {
    for (std::size_t h = 1; h <= 6; ++h) ASSERT_TRUE(oracle::well_formed(gen_grid(w, h, true)));
  }
  EXPECT_THROW(gen_grid(0, 3, false), std::invalid_argument);
}

TEST(Triangles, KnownColorings) {
  const Graph g = gen_triangle_composition(3);
  EXPECT_EQ(g.size(), 12u);
  ASSERT_TRUE(oracle::well_formed(g));
  // Outer nodes first, then the three inner triangles.
  const Coloring optimal{{2, 3, 1, 1, 2, 3, 1, 2, 3, 1, 2, 3}};
  const Coloring six{{4, 5, 6, 1, 2, 3, 2, 3, 1, 3, 1, 2}};
  EXPECT_TRUE(is_valid(g, optimal));
  EXPECT_EQ(num_colors(optimal), 3u);
  EXPECT_TRUE(is_valid(g, six));
  EXPECT_EQ(num_colors(six), 6u);
}

TEST(Triangles, SmallAndLargerCompositions) {
  const Graph one = gen_triangle_composition(1);
  EXPECT_EQ(one.size(), 6u);
  EXPECT_TRUE(oracle::colorable(one, 3));

  const Graph five = gen_triangle_composition(5);
  EXPECT_EQ(five.size(), 18u);
  Coloring manual;
  manual.colors = {1, 2, 3};
  for (int j = 0; j < 5; ++j) manual.colors.insert(manual.colors.end(), {2, 3, 1});
  EXPECT_TRUE(is_valid(five, manual));
  EXPECT_TRUE(oracle::colorable(five, 3));
  EXPECT_FALSE(oracle::colorable(five, 2));
  EXPECT_THROW(gen_triangle_composition(0), std::invalid_argument);
}

TEST(Mycielski, MatchesPublishedMyciel3) {
  EXPECT_EQ(gen_mycielski(3), load_dimacs(FROGCOLOR_TEST_DATA "/myciel3.col"));
}

TEST(Mycielski, FamilySizesAndChromaticNumber) {
  const std::size_t nodes[] = {5, 11, 23, 47, 95, 191};
  const std::size_t edges[] = {5, 20, 71, 236, 755, 2360};
  const std::size_t deltas[] = {2, 5, 11, 23, 47, 95};
  for (std::size_t k = 2; k <= 7; ++k) {
    const Graph g = gen_mycielski(k);
    ASSERT_TRUE(oracle::well_formed(g));
    EXPECT_EQ(g.size(), nodes[k - 2]);
    EXPECT_EQ(g.edge_count(), edges[k - 2]);
    EXPECT_EQ(g.max_degree(), deltas[k - 2]);
  }
  const Graph m3 = gen_mycielski(3);
  EXPECT_TRUE(oracle::colorable(m3, 4));
  EXPECT_FALSE(oracle::colorable(m3, 3));
  for (const auto& [u, v] : m3.edges()) {
    for (NodeId w : m3.neighbors(u)) EXPECT_FALSE(m3.has_edge(v, w)) << "triangle";
  }
}

TEST(Queen, PublishedTriples) {
  const Graph q5 = gen_queen(5, 5);
  EXPECT_EQ(q5.size(), 25u);
  EXPECT_EQ(q5.max_degree(), 16u);
  EXPECT_EQ(q5.edge_count(), 160u);
  EXPECT_EQ(gen_queen(8, 12).max_degree(), 32u);
  EXPECT_EQ(gen_queen(16, 16).max_degree(), 59u);
  EXPECT_TRUE(oracle::well_formed(gen_queen(7, 3)));
}

TEST(Multipartite, DegreesFollowPartSizes) {
  const std::vector<std::size_t> parts = {1, 2, 3, 4};
  const Graph g = gen_complete_multipartite(parts);
  EXPECT_EQ(g.size(), 10u);
  EXPECT_EQ(g.max_degree(), 9u);
  EXPECT_EQ(g.edge_count(), 35u);
  EXPECT_TRUE(oracle::colorable(g, 4));
  EXPECT_FALSE(oracle::colorable(g, 3));
}
