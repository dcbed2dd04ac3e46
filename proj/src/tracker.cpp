#include "frogcolor/tracker.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace frogcolor {

std::uint32_t TreeInfo::height() const {
  return heights.empty() ? 0 : *std::max_element(heights.begin(), heights.end());
}

TreeInfo build_tree(const Graph& g) {
  const std::size_t n = g.size();
  constexpr auto kUnvisited = std::numeric_limits<std::uint32_t>::max();
  TreeInfo t;
  t.parent.assign(n, kNoParent);
  t.children.assign(n, {});
  t.depth.assign(n, 0);
  t.component.assign(n, kUnvisited);

  std::deque<NodeId> frontier;
  for (NodeId s = 0; s < n; ++s) {
    if (t.component[s] != kUnvisited) continue;
    const auto c = static_cast<std::uint32_t>(t.roots.size());
    t.roots.push_back(s);
    t.heights.push_back(0);
    t.component[s] = c;
    frontier.push_back(s);
    while (!frontier.empty()) {
      const NodeId v = frontier.front();
      frontier.pop_front();
      t.heights[c] = std::max(t.heights[c], t.depth[v]);
      for (NodeId u : g.neighbors(v)) {
        if (t.component[u] != kUnvisited) continue;
        t.component[u] = c;
        t.parent[u] = v;
        t.depth[u] = t.depth[v] + 1;
        t.children[v].push_back(u);
        frontier.push_back(u);
      }
    }
  }
  return t;
}

HistoryBuffer::HistoryBuffer(std::size_t capacity) : slots_(std::max<std::size_t>(capacity, 1)) {}

void HistoryBuffer::push(Round round, Color color) {
  slots_[next_] = {round, color};
  next_ = (next_ + 1) % slots_.size();
  size_ = std::min(size_ + 1, slots_.size());
}

std::optional<Color> HistoryBuffer::lookup(Round round) const {
  for (std::size_t i = 0; i < size_; ++i) {
    const auto& [r, c] = slots_[(next_ + slots_.size() - 1 - i) % slots_.size()];
    if (r == round) return c;
    if (r < round) break;
  }
  return std::nullopt;
}

std::vector<std::pair<Round, Color>> HistoryBuffer::entries() const {
  std::vector<std::pair<Round, Color>> out;
  out.reserve(size_);
  for (std::size_t i = size_; i > 0; --i) out.push_back(slots_[(next_ + slots_.size() - i) % slots_.size()]);
  return out;
}

std::size_t history_capacity(std::uint32_t height) { return std::max<std::size_t>(1, 2 * std::size_t{height}); }

UpReport convergecast_step(Round round, Color own, std::span<const UpReport> child_reports) {
  UpReport out{round, own};
  for (const auto& rep : child_reports) {
    if (rep.round == round) out.color = std::max(out.color, rep.color);
  }
  return out;
}

std::optional<Round> root_update(BestRecord& best, const UpReport& aggregated, bool valid) {
  if (!valid) return std::nullopt;
  if (!best.empty() && aggregated.color >= best.best_max_color) return std::nullopt;
  best.best_max_color = aggregated.color;
  best.best_round = aggregated.round;
  return aggregated.round;
}

bool TrackerReport::complete() const {
  for (std::size_t v = 0; v < known_round.size(); ++v) {
    const auto& best = components[component[v]].best;
    if (best.empty() || known_round[v] != best.best_round || !recalled[v]) return false;
  }
  return true;
}

Color TrackerReport::best_max_color() const {
  Color out = 0;
  for (const auto& rec : components) {
    if (rec.best.empty()) return 0;
    out = std::max(out, rec.best.best_max_color);
  }
  return out;
}

Coloring TrackerReport::assignment() const {
  Coloring c;
  c.colors.reserve(recalled.size());
  for (const auto& r : recalled) c.colors.push_back(r.value_or(0));
  return c;
}

void Tracker::reset(const Graph& g, const SimConfig& cfg) {
  graph_ = &g;
  gate_ = cfg.validity_gate;
  tree_ = build_tree(g);
  nodes_.clear();
  nodes_.reserve(g.size());
  for (NodeId v = 0; v < g.size(); ++v) nodes_.push_back(NodeMemory{HistoryBuffer(history_capacity(tree_.height_of(v))), {}, {}, {}, {}});
  records_.clear();
  for (std::size_t c = 0; c < tree_.roots.size(); ++c) {
    records_.push_back(ComponentRecord{tree_.roots[c], tree_.heights[c], {}, {}});
  }
  component_valid_.clear();
  max_history_ = 0;
}

void Tracker::pin(NodeId v, Round round) {
  auto& mem = nodes_[v];
  const auto color = mem.history.lookup(round);
  if (!color) {
    throw std::logic_error("node " + std::to_string(v) + " no longer holds round " + std::to_string(round));
  }
  mem.known = round;
  mem.recalled = *color;
  mem.pins.emplace_back(round, *color);
}

void Tracker::on_fire(NodeId v, Round round, Color color, Message& msg) {
  auto& mem = nodes_[v];
  mem.history.push(round, color);
  max_history_ = std::max(max_history_, mem.history.size());

  const std::uint32_t c = tree_.component[v];
  const std::int64_t h = tree_.heights[c];
  const std::int64_t target = std::int64_t{round} - (h - tree_.depth[v]);
  TrackerFields fields;

  if (target >= 1) {
    const auto t = static_cast<Round>(target);
    const auto own = mem.history.lookup(t);
    if (!own) throw std::logic_error("node " + std::to_string(v) + " lost its color of round " + std::to_string(t));
    UpReport agg{t, *own};
    auto it = mem.child_max.find(t);
    if (it != mem.child_max.end()) agg.color = std::max(agg.color, it->second);
    mem.child_max.erase(mem.child_max.begin(), mem.child_max.upper_bound(t));

    if (tree_.parent[v] == kNoParent) {
      // A singleton component is trivially valid, even before its round ends.
      const bool valid = !gate_ || h == 0 || component_valid_.at(t - 1)[c];
      if (root_update(records_[c].best, agg, valid)) {
        records_[c].updates.push_back(BestUpdate{round, t, agg.color});
        pin(v, t);
      }
    } else {
      fields.up = agg;
    }
  }
  fields.down = mem.known;
  msg = piggyback_encode(fields, std::move(msg));
}

void Tracker::on_receive(NodeId receiver, const Envelope& env) {
  const TrackerFields fields = piggyback_decode(env.message);
  if (fields.up && tree_.parent[env.sender] == receiver) {
    auto& slot = nodes_[receiver].child_max[fields.up->round];
    slot = std::max(slot, fields.up->color);
  }
  if (fields.down && tree_.parent[receiver] == env.sender && nodes_[receiver].known != fields.down) {
    pin(receiver, *fields.down);
  }
}

void Tracker::on_round_end(Round, std::span<const Color> colors) {
  std::vector<bool> valid(tree_.roots.size(), true);
  for (NodeId v = 0; v < colors.size(); ++v) {
    for (NodeId u : graph_->neighbors(v)) {
      if (u > v && colors[u] == colors[v]) valid[tree_.component[v]] = false;
    }
  }
  component_valid_.push_back(std::move(valid));
}

TrackerReport Tracker::report() const {
  TrackerReport out;
  out.components = records_;
  for (const auto& mem : nodes_) {
    out.known_round.push_back(mem.known);
    out.recalled.push_back(mem.recalled);
    out.pins.push_back(mem.pins);
  }
  out.component = tree_.component;
  out.max_history = max_history_;
  for (std::uint32_t h : tree_.heights) out.history_limit = std::max(out.history_limit, history_capacity(h));
  return out;
}

}  // namespace frogcolor
