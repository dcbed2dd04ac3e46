#include "frogcolor/frogsim.hpp"

#include <algorithm>
#include <stdexcept>

#include "frogcolor/kernel.hpp"

namespace frogcolor {
namespace {

// Smallest color >= 1 not contained in `used`; sorts `used` in place.
Color smallest_free(std::vector<Color>& used) {
  std::sort(used.begin(), used.end());
  Color c = 1;
  for (Color u : used) {
    if (u == c) ++c;
    if (u > c) break;
  }
  return c;
}

}  // namespace

Color min_color_not_used(std::span<const Envelope> inbox) {
  std::vector<Color> used;
  used.reserve(inbox.size());
  for (const auto& env : inbox) {
    if (const auto* m = std::get_if<ColoringMessage>(&env.message.payload)) used.push_back(m->color);
  }
  return smallest_free(used);
}

ColoringMessage phase1_event(NodeState& state, std::span<const Envelope> inbox, const SimConfig& cfg) {
  std::size_t heard = 0;
  for (const auto& env : inbox) heard += std::holds_alternative<ColoringMessage>(env.message.payload);
  state.theta = recalc_theta(state.theta, state.alpha, inbox, cfg.kernel);
  state.color = min_color_not_used(inbox);
  state.alpha /= cfg.rho;
  const double relevance = heard == 0 ? 1.0 : 1.0 / static_cast<double>(heard * heard);
  return ColoringMessage{state.theta, state.color, relevance};
}

void phase2_init(NodeState& state, Stream& rng, const SimConfig& cfg) {
  state.phase = FrogPhase::kRefine;
  state.power = state.color == 1 ? rng.uniform_int(1, cfg.power_max) : 0;
}

RefinementMessage phase2_event(NodeState& state, NodeId self, std::span<const Envelope> inbox) {
  bool triggered = false;
  std::uint64_t adopted = state.power;
  for (const auto& env : inbox) {
    const auto* m = std::get_if<RefinementMessage>(&env.message.payload);
    if (!m) continue;
    if (m->power > state.power) triggered = true;
    if (m->power == state.power && m->color == state.color && env.sender > self) triggered = true;
    adopted = std::max(adopted, m->power);
  }
  if (triggered) {
    std::vector<Color> used;
    for (const auto& env : inbox) {
      const auto* m = std::get_if<RefinementMessage>(&env.message.payload);
      if (m && m->power >= adopted) used.push_back(m->color);
    }
    state.color = smallest_free(used);
    state.power = adopted;
  }
  return RefinementMessage{state.color, state.power};
}

void FrogSimLogic::reset(const Graph& g, const SimConfig& cfg) {
  cfg_ = cfg;
  states_.assign(g.size(), NodeState{});
  drawn_.clear();
  if (!preset_.empty() && preset_.size() != g.size()) {
    throw std::invalid_argument("preset phases do not match the graph size");
  }
  for (NodeId v = 0; v < g.size(); ++v) {
    states_[v].theta = preset_.empty() ? Stream(cfg.seed, v, StreamTag::kTheta).uniform01() : preset_[v];
    states_[v].alpha = cfg.alpha0;
  }
}

Message FrogSimLogic::fire(NodeId v, Round round, std::span<const Envelope> inbox) {
  NodeState& s = states_[v];
  if (!refinement_ || round <= cfg_.phase1_rounds) return Message{phase1_event(s, inbox, cfg_), {}};
  if (round == cfg_.phase1_rounds + 1) {
    Stream rng(cfg_.seed, v, StreamTag::kPower);
    phase2_init(s, rng, cfg_);
    if (s.power != 0) drawn_.push_back(s.power);
    return Message{RefinementMessage{s.color, s.power}, {}};
  }
  return Message{phase2_event(s, v, inbox), {}};
}

}  // namespace frogcolor
