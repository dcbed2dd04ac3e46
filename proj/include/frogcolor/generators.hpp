#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "frogcolor/graph.hpp"

namespace frogcolor {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct GeometricGraph {
  Graph graph;
  std::vector<Point> points;
};

// n points uniform in the unit square; u~v iff their Euclidean distance is
// at most r. Requires n >= 1 and 0 < r <= sqrt(2).
GeometricGraph gen_random_geometric_with_points(std::size_t n, double r, std::uint64_t seed);
Graph gen_random_geometric(std::size_t n, double r, std::uint64_t seed);

// w x h lattice with 4-neighborhood, node id y*w + x. With torus=true rows
// and columns wrap around; wrap edges that coincide with lattice edges
// collapse.
Graph gen_grid(std::size_t w, std::size_t h, bool torus);

// Outer triangle on nodes 0,1,2 plus k inner triangles; node t of every
// inner triangle (ids 3+3j+t) is joined to outer node t.
Graph gen_triangle_composition(std::size_t k);

// DIMACS "myciel<k>" family: k-1 Mycielski steps applied to K2, giving
// chromatic number k+1 (myciel3 has 11 nodes).
Graph gen_mycielski(std::size_t k);

// Queen graph on a w x h board (DIMACS "queen<w>_<h>").
Graph gen_queen(std::size_t w, std::size_t h);

// Complete multipartite graph with the given part sizes.
Graph gen_complete_multipartite(std::span<const std::size_t> parts);

}  // namespace frogcolor
