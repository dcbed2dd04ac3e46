#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "frogcolor/config.hpp"
#include "frogcolor/graph.hpp"
#include "frogcolor/messages.hpp"

namespace frogcolor {

// Per-node behavior driven by the engine. Implementations own all node
// state; the engine owns queues, ordering and snapshots.
class NodeLogic {
 public:
  virtual ~NodeLogic() = default;

  virtual void reset(const Graph& g, const SimConfig& cfg) = 0;
  // Phase in [0, 1); read by the engine only at round start.
  virtual double theta(NodeId v) const = 0;
  virtual Color color(NodeId v) const = 0;
  // inbox holds at most one envelope per sender.
  virtual Message fire(NodeId v, Round round, std::span<const Envelope> inbox) = 0;
};

// Observes message traffic without influencing node logic. Used by the
// best-coloring tracker.
class MessageHook {
 public:
  virtual ~MessageHook() = default;

  virtual void reset(const Graph& g, const SimConfig& cfg) = 0;
  // Called right after v's logic event, before delivery; may attach fields.
  virtual void on_fire(NodeId v, Round round, Color color, Message& msg) = 0;
  // Called once per delivered envelope, before any deduplication.
  virtual void on_receive(NodeId receiver, const Envelope& env) = 0;
  // Called after every node fired in `round`, with the snapshot.
  virtual void on_round_end(Round round, std::span<const Color> colors) = 0;
};

struct RoundStats {
  Color max_color = 0;
  bool valid = false;
  std::uint32_t changed = 0;
  std::uint64_t messages = 0;
  // Largest circular phase displacement of any node during the round.
  double max_phase_shift = 0.0;

  friend bool operator==(const RoundStats&, const RoundStats&) = default;
};

struct RunReport {
  // 0 with best_round 0 when no round ended with a valid coloring.
  Color best_colors = 0;
  Round best_round = 0;
  bool found_valid = false;
  std::vector<RoundStats> per_round;
  // Earliest round <= K attaining the best valid color count within the
  // first K rounds; 0 if none of them is valid.
  Round rounds_to_best_phase1 = 0;
  Coloring final_coloring;
  Coloring best_coloring;
  // Filled when RunOptions::record_snapshots is set; index r-1 is round r.
  std::vector<Coloring> snapshots;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

struct RunOptions {
  bool record_snapshots = false;
  MessageHook* hook = nullptr;
  std::function<void(Round, std::span<const Color>)> on_round_end;
};

// Stable ascending order by theta, ties by node id.
std::vector<NodeId> event_order(std::span<const double> thetas);

// Keeps only the last envelope per sender, preserving survivor order.
std::vector<Envelope> dedup(std::span<const Envelope> queue);
// In-place variant; `last_seen` must have one slot per possible sender and
// is left filled with the sentinel value UINT32_MAX on return.
void dedup_in_place(std::vector<Envelope>& queue, std::vector<std::uint32_t>& last_seen);

// Executes cfg.max_rounds rounds. Throws std::invalid_argument for an
// empty graph or an invalid cfg.
RunReport run(const Graph& g, const SimConfig& cfg, NodeLogic& logic, const RunOptions& options = {});

// Circular distance between two phases, in [0, 0.5].
double circular_distance(double a, double b);

}  // namespace frogcolor
