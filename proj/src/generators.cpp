#include "frogcolor/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "frogcolor/rng.hpp"

namespace frogcolor {

GeometricGraph gen_random_geometric_with_points(std::size_t n, double r, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("geometric graph needs n >= 1");
  if (!(r > 0.0) || r > std::sqrt(2.0)) throw std::invalid_argument("geometric radius must lie in (0, sqrt(2)]");

  GeometricGraph out;
  Stream rng(seed, 0, StreamTag::kGeometric);
  out.points.resize(n);
  for (auto& p : out.points) {
    p.x = rng.uniform01();
    p.y = rng.uniform01();
  }

  // Bucket points into cells of side >= r so only adjacent cells need a
  // distance check.
  const auto cells = static_cast<std::size_t>(std::clamp(std::floor(1.0 / r), 1.0, 1024.0));
  auto cell_of = [cells](double c) { return std::min(static_cast<std::size_t>(c * cells), cells - 1); };
  std::vector<std::vector<NodeId>> buckets(cells * cells);
  for (NodeId i = 0; i < n; ++i) {
    buckets[cell_of(out.points[i].y) * cells + cell_of(out.points[i].x)].push_back(i);
  }

  const double r2 = r * r;
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    const auto cx = static_cast<long>(cell_of(out.points[i].x));
    const auto cy = static_cast<long>(cell_of(out.points[i].y));
    for (long dy = -1; dy <= 1; ++dy) {
      for (long dx = -1; dx <= 1; ++dx) {
        const long x = cx + dx;
        const long y = cy + dy;
        if (x < 0 || y < 0 || x >= static_cast<long>(cells) || y >= static_cast<long>(cells)) continue;
        for (NodeId j : buckets[static_cast<std::size_t>(y) * cells + static_cast<std::size_t>(x)]) {
          if (j <= i) continue;
          const double ddx = out.points[i].x - out.points[j].x;
          const double ddy = out.points[i].y - out.points[j].y;
          if (ddx * ddx + ddy * ddy <= r2) edges.emplace_back(i, j);
        }
      }
    }
  }
  out.graph = Graph::from_edges(n, edges);
  return out;
}

Graph gen_random_geometric(std::size_t n, double r, std::uint64_t seed) {
  return gen_random_geometric_with_points(n, r, seed).graph;
}

Graph gen_grid(std::size_t w, std::size_t h, bool torus) {
  if (w < 1 || h < 1) throw std::invalid_argument("grid dimensions must be >= 1");
  auto id = [w](std::size_t x, std::size_t y) { return static_cast<NodeId>(y * w + x); };
  std::vector<Edge> edges;
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      if (x + 1 < w) edges.emplace_back(id(x, y), id(x + 1, y));
      if (y + 1 < h) edges.emplace_back(id(x, y), id(x, y + 1));
    }
  }
  if (torus) {
    // Width 1 would wrap onto itself; width 2 duplicates the lattice edge.
    if (w >= 2) {
      for (std::size_t y = 0; y < h; ++y) edges.emplace_back(id(w - 1, y), id(0, y));
    }
    if (h >= 2) {
      for (std::size_t x = 0; x < w; ++x) edges.emplace_back(id(x, h - 1), id(x, 0));
    }
  }
  return Graph::from_edges(w * h, edges);
}

Graph gen_triangle_composition(std::size_t k) {
  if (k < 1) throw std::invalid_argument("triangle composition needs k >= 1");
  std::vector<Edge> edges = {{0, 1}, {1, 2}, {0, 2}};
  for (std::size_t j = 0; j < k; ++j) {
    const auto base = static_cast<NodeId>(3 + 3 * j);
    edges.emplace_back(base, base + 1);
    edges.emplace_back(base + 1, base + 2);
    edges.emplace_back(base, base + 2);
    for (NodeId t = 0; t < 3; ++t) edges.emplace_back(base + t, t);
  }
  return Graph::from_edges(3 + 3 * k, edges);
}

Graph gen_mycielski(std::size_t k) {
  if (k < 2) throw std::invalid_argument("mycielski order must be >= 2");
  std::size_t n = 2;
  std::vector<Edge> edges = {{0, 1}};
  for (std::size_t step = 1; step < k; ++step) {
    std::vector<Edge> next = edges;
    const auto shadow = static_cast<NodeId>(n);
    const auto apex = static_cast<NodeId>(2 * n);
    for (const auto& [a, b] : edges) {
      next.emplace_back(a, shadow + b);
      next.emplace_back(b, shadow + a);
    }
    for (NodeId i = 0; i < n; ++i) next.emplace_back(shadow + i, apex);
    edges = std::move(next);
    n = 2 * n + 1;
  }
  return Graph::from_edges(n, edges);
}

Graph gen_queen(std::size_t w, std::size_t h) {
  if (w < 1 || h < 1) throw std::invalid_argument("queen board dimensions must be >= 1");
  std::vector<Edge> edges;
  const std::size_t n = w * h;
  for (std::size_t a = 0; a < n; ++a) {
    const auto ax = static_cast<long>(a % w);
    const auto ay = static_cast<long>(a / w);
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto bx = static_cast<long>(b % w);
      const auto by = static_cast<long>(b / w);
      if (ax == bx || ay == by || std::labs(ax - bx) == std::labs(ay - by)) {
        edges.emplace_back(static_cast<NodeId>(a), static_cast<NodeId>(b));
      }
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gen_complete_multipartite(std::span<const std::size_t> parts) {
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], p);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < part_of.size(); ++u) {
    for (NodeId v = u + 1; v < part_of.size(); ++v) {
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(part_of.size(), edges);
}

}  // namespace frogcolor
