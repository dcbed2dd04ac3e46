#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "frogcolor/engine.hpp"

namespace frogcolor {

inline constexpr NodeId kNoParent = std::numeric_limits<NodeId>::max();

// BFS forest, one tree per connected component, each rooted at the
// component's smallest node id.
struct TreeInfo {
  std::vector<NodeId> parent;  // kNoParent for roots
  std::vector<std::vector<NodeId>> children;
  std::vector<std::uint32_t> depth;
  std::vector<std::uint32_t> component;
  std::vector<NodeId> roots;            // per component
  std::vector<std::uint32_t> heights;   // per component

  NodeId root() const { return roots.front(); }
  // Height of the tallest tree.
  std::uint32_t height() const;
  std::uint32_t height_of(NodeId v) const { return heights[component[v]]; }
};

TreeInfo build_tree(const Graph& g);

// Ring buffer of the most recent (round, color) pairs.
class HistoryBuffer {
 public:
  explicit HistoryBuffer(std::size_t capacity = 1);

  // Rounds must be pushed in increasing order.
  void push(Round round, Color color);
  std::optional<Color> lookup(Round round) const;

  std::size_t size() const { return size_; }
  std::size_t capacity() const { return slots_.size(); }
  // Oldest first.
  std::vector<std::pair<Round, Color>> entries() const;

 private:
  std::vector<std::pair<Round, Color>> slots_;
  std::size_t next_ = 0;
  std::size_t size_ = 0;
};

// Retention needed for a tree of the given height: max(1, 2h).
std::size_t history_capacity(std::uint32_t height);

// Max of own color and the child reports concerning `round`; reports for
// other rounds are ignored.
UpReport convergecast_step(Round round, Color own, std::span<const UpReport> child_reports);

struct BestRecord {
  Color best_max_color = 0;  // 0 until the first accepted aggregate
  Round best_round = 0;

  bool empty() const { return best_max_color == 0; }
  friend bool operator==(const BestRecord&, const BestRecord&) = default;
};

// Accepts `aggregated` iff `valid` and it strictly improves `best`; returns
// the round to broadcast on acceptance.
std::optional<Round> root_update(BestRecord& best, const UpReport& aggregated, bool valid);

struct BestUpdate {
  Round learned_at = 0;
  Round round = 0;
  Color colors = 0;

  friend bool operator==(const BestUpdate&, const BestUpdate&) = default;
};

struct ComponentRecord {
  NodeId root = 0;
  std::uint32_t height = 0;
  BestRecord best;
  std::vector<BestUpdate> updates;  // in acceptance order
};

struct TrackerReport {
  std::vector<ComponentRecord> components;
  // Latest best round each node has heard of, and its color in that round.
  std::vector<std::optional<Round>> known_round;
  std::vector<std::optional<Color>> recalled;
  // Every (round, color) a node pinned, in order.
  std::vector<std::vector<std::pair<Round, Color>>> pins;
  std::vector<std::uint32_t> component;
  // Largest history occupancy observed at any node.
  std::size_t max_history = 0;
  std::size_t history_limit = 0;

  // Each node's recalled color matches its component's current best round.
  bool complete() const;
  // Max over components; 0 if some component has no record.
  Color best_max_color() const;
  // Recalled colors (0 where none).
  Coloring assignment() const;
};

// Distributed best-coloring memory. Reports ride on the messages the node
// logic sends anyway and are consumed at delivery time, so the engine's
// keep-last deduplication never drops them.
//
// Schedule: a node at depth d of a tree of height h, at its event in round
// r, reports the subtree maximum of round r - (h - d). The root therefore
// aggregates round t at round t + h and its decision reaches depth d by
// round t + h + d - 1.
class Tracker final : public MessageHook {
 public:
  void reset(const Graph& g, const SimConfig& cfg) override;
  void on_fire(NodeId v, Round round, Color color, Message& msg) override;
  void on_receive(NodeId receiver, const Envelope& env) override;
  void on_round_end(Round round, std::span<const Color> colors) override;

  const TreeInfo& tree() const { return tree_; }
  TrackerReport report() const;

 private:
  struct NodeMemory {
    HistoryBuffer history;
    std::map<Round, Color> child_max;
    std::optional<Round> known;
    std::optional<Color> recalled;
    std::vector<std::pair<Round, Color>> pins;
  };

  void pin(NodeId v, Round round);

  const Graph* graph_ = nullptr;
  bool gate_ = true;
  TreeInfo tree_;
  std::vector<NodeMemory> nodes_;
  std::vector<ComponentRecord> records_;
  // component_valid_[r - 1][c]: snapshot of round r restricted to c is valid.
  std::vector<std::vector<bool>> component_valid_;
  std::size_t max_history_ = 0;
};

}  // namespace frogcolor
