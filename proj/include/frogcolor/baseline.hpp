#pragma once

#include <optional>
#include <span>
#include <vector>

#include "frogcolor/engine.hpp"
#include "frogcolor/rng.hpp"

namespace frogcolor {

struct BaselineState {
  BaselineStatus status = BaselineStatus::kTentative;
  Color color = 1;
  // Sorted; starts as 1..deg+1 and loses every color a neighbor finalized.
  std::vector<Color> palette;
  // Proposal announced at the previous event, if any.
  std::optional<Color> pending;

  friend bool operator==(const BaselineState&, const BaselineState&) = default;
};

BaselineState baseline_init(std::size_t degree);

// One event of the randomized proposal baseline. Final nodes repeat their
// color. A pending proposal becomes final when no inbox message carries the
// same color; otherwise a new proposal is drawn from the palette. A node
// whose whole neighborhood is final takes its smallest free color at once.
BaselineMessage baseline_event(BaselineState& state, std::size_t degree, std::span<const Envelope> inbox, Stream& rng);

// Node phases are drawn once and never move, so every node hears each
// neighbor exactly once between two of its own events.
class BaselineLogic final : public NodeLogic {
 public:
  void reset(const Graph& g, const SimConfig& cfg) override;
  double theta(NodeId v) const override { return thetas_[v]; }
  Color color(NodeId v) const override { return states_[v].color; }
  Message fire(NodeId v, Round round, std::span<const Envelope> inbox) override;

  const BaselineState& state(NodeId v) const { return states_[v]; }

 private:
  const Graph* graph_ = nullptr;
  std::vector<double> thetas_;
  std::vector<BaselineState> states_;
  std::vector<Stream> rngs_;
};

}  // namespace frogcolor
