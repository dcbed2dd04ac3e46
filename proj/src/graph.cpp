#include "frogcolor/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace frogcolor {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::vector<NodeId>> lists(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") out of range for " + std::to_string(n) + " nodes");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop on node " + std::to_string(u));
    }
    lists[u].push_back(v);
    lists[v].push_back(u);
  }

  Graph g;
  g.offsets_.reserve(n + 1);
  g.offsets_.push_back(0);
  for (auto& list : lists) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    g.adjacency_.insert(g.adjacency_.end(), list.begin(), list.end());
    g.offsets_.push_back(g.adjacency_.size());
    g.max_degree_ = std::max(g.max_degree_, list.size());
  }
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (u >= size() || v >= size()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < size(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t max_degree(const Graph& g) { return g.max_degree(); }

bool is_valid(const Graph& g, std::span<const Color> colors) {
  if (colors.size() != g.size()) {
    throw std::invalid_argument("coloring has " + std::to_string(colors.size()) +
                                " entries for a graph of " + std::to_string(g.size()) + " nodes");
  }
  for (NodeId u = 0; u < g.size(); ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (u < v && colors[u] == colors[v]) return false;
    }
  }
  return true;
}

bool is_valid(const Graph& g, const Coloring& c) { return is_valid(g, std::span<const Color>(c.colors)); }

Color num_colors(std::span<const Color> colors) {
  Color k = 0;
  for (Color c : colors) k = std::max(k, c);
  return k;
}

Color num_colors(const Coloring& c) { return num_colors(std::span<const Color>(c.colors)); }

std::vector<std::uint32_t> connected_components(const Graph& g) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> comp(g.size(), kUnset);
  std::vector<NodeId> stack;
  std::uint32_t next = 0;
  for (NodeId s = 0; s < g.size(); ++s) {
    if (comp[s] != kUnset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : g.neighbors(u)) {
        if (comp[v] == kUnset) {
          comp[v] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  return comp;
}

}  // namespace frogcolor
