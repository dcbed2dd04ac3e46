#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace frogcolor {

using NodeId = std::uint32_t;
using Color = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

// Immutable undirected simple graph stored as compressed adjacency lists.
// Neighbor lists are sorted and free of duplicates and self-loops.
class Graph {
 public:
  Graph() = default;

  // Builds a graph on nodes 0..n-1. Duplicate edges and both orientations
  // collapse into one undirected edge. Throws std::invalid_argument on
  // self-loops or out-of-range endpoints.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return adjacency_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const { return max_degree_; }

  bool has_edge(NodeId u, NodeId v) const;

  // Every undirected edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adjacency_;
  std::size_t max_degree_ = 0;
};

// Color assignment, one positive color id per node.
struct Coloring {
  std::vector<Color> colors;

  std::size_t size() const { return colors.size(); }
  Color operator[](NodeId v) const { return colors[v]; }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

std::size_t max_degree(const Graph& g);

// True iff no edge joins two equally colored nodes. Throws
// std::invalid_argument if the coloring length differs from g.size().
bool is_valid(const Graph& g, const Coloring& c);
bool is_valid(const Graph& g, std::span<const Color> colors);

// Largest color id in use (0 for an empty coloring).
Color num_colors(const Coloring& c);
Color num_colors(std::span<const Color> colors);

// Connected component index per node; components are numbered in order of
// their smallest node id.
std::vector<std::uint32_t> connected_components(const Graph& g);

}  // namespace frogcolor
