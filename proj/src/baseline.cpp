#include "frogcolor/baseline.hpp"

#include <algorithm>
#include <numeric>

namespace frogcolor {

BaselineState baseline_init(std::size_t degree) {
  BaselineState s;
  s.palette.resize(degree + 1);
  std::iota(s.palette.begin(), s.palette.end(), Color{1});
  return s;
}

BaselineMessage baseline_event(BaselineState& state, std::size_t degree, std::span<const Envelope> inbox, Stream& rng) {
  if (state.status == BaselineStatus::kFinal) return {BaselineStatus::kFinal, state.color};

  std::size_t final_neighbors = 0;
  bool clash = false;
  for (const auto& env : inbox) {
    const auto* m = std::get_if<BaselineMessage>(&env.message.payload);
    if (!m) continue;
    if (m->status == BaselineStatus::kFinal) {
      ++final_neighbors;
      auto it = std::lower_bound(state.palette.begin(), state.palette.end(), m->color);
      if (it != state.palette.end() && *it == m->color) state.palette.erase(it);
    }
    if (state.pending && m->color == *state.pending) clash = true;
  }

  if (final_neighbors == degree) {
    state.color = state.palette.front();
    state.status = BaselineStatus::kFinal;
    state.pending.reset();
  } else if (state.pending && !clash) {
    state.color = *state.pending;
    state.status = BaselineStatus::kFinal;
    state.pending.reset();
  } else {
    state.color = state.palette[rng.uniform_int(0, state.palette.size() - 1)];
    state.pending = state.color;
  }
  return {state.status, state.color};
}

void BaselineLogic::reset(const Graph& g, const SimConfig& cfg) {
  graph_ = &g;
  thetas_.resize(g.size());
  states_.clear();
  rngs_.clear();
  for (NodeId v = 0; v < g.size(); ++v) {
    thetas_[v] = Stream(cfg.seed, v, StreamTag::kTheta).uniform01();
    states_.push_back(baseline_init(g.degree(v)));
    rngs_.emplace_back(cfg.seed, v, StreamTag::kBaseline);
  }
}

Message BaselineLogic::fire(NodeId v, Round, std::span<const Envelope> inbox) {
  return Message{baseline_event(states_[v], graph_->degree(v), inbox, rngs_[v]), {}};
}

}  // namespace frogcolor
