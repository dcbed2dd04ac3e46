#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "frogcolor/engine.hpp"
#include "frogcolor/rng.hpp"

namespace frogcolor {

enum class FrogPhase : std::uint8_t { kDesync, kRefine };

struct NodeState {
  double theta = 0.0;
  Color color = 1;
  double alpha = 0.5;
  std::uint64_t power = 0;
  FrogPhase phase = FrogPhase::kDesync;

  friend bool operator==(const NodeState&, const NodeState&) = default;
};

// Smallest color >= 1 absent from the ColoringMessages in the inbox.
Color min_color_not_used(std::span<const Envelope> inbox);

// One desynchronization event: new theta, greedy color, alpha decay.
// Returns the broadcast, whose relevance is 1/|inbox|^2 (1 when empty).
ColoringMessage phase1_event(NodeState& state, std::span<const Envelope> inbox, const SimConfig& cfg);

// First refinement round: color-1 nodes draw a power in [1, power_max].
void phase2_init(NodeState& state, Stream& rng, const SimConfig& cfg);

// Refinement event for node `self`. Considers only RefinementMessages.
// Triggers on a strictly larger heard power, or on an equal-power
// same-colored sender with a larger id. When triggered the node adopts the
// largest heard power P, then takes the smallest color not held by any
// sender with power >= P.
RefinementMessage phase2_event(NodeState& state, NodeId self, std::span<const Envelope> inbox);

// FrogSim node logic. Rounds 1..K desynchronize, round K+1 draws powers,
// later rounds refine. With refinement disabled every round is phase I.
class FrogSimLogic final : public NodeLogic {
 public:
  explicit FrogSimLogic(bool refinement = true) : refinement_(refinement) {}

  void reset(const Graph& g, const SimConfig& cfg) override;
  double theta(NodeId v) const override { return states_[v].theta; }
  Color color(NodeId v) const override { return states_[v].color; }
  Message fire(NodeId v, Round round, std::span<const Envelope> inbox) override;

  const NodeState& state(NodeId v) const { return states_[v]; }
  // Start phases used by the next reset() instead of seeded draws; must
  // hold one value in [0, 1) per node.
  void preset_thetas(std::vector<double> thetas) { preset_ = std::move(thetas); }
  // Nonzero powers drawn so far, one entry per drawing node.
  const std::vector<std::uint64_t>& drawn_powers() const { return drawn_; }

 private:
  bool refinement_;
  SimConfig cfg_;
  std::vector<NodeState> states_;
  std::vector<std::uint64_t> drawn_;
  std::vector<double> preset_;
};

}  // namespace frogcolor
