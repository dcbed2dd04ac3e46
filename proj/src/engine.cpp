#include "frogcolor/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace frogcolor {

namespace {
constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
}  // namespace

std::vector<NodeId> event_order(std::span<const double> thetas) {
  std::vector<NodeId> order(thetas.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return thetas[a] < thetas[b]; });
  return order;
}

void dedup_in_place(std::vector<Envelope>& queue, std::vector<std::uint32_t>& last_seen) {
  for (std::uint32_t i = 0; i < queue.size(); ++i) last_seen[queue[i].sender] = i;
  std::size_t out = 0;
  for (std::uint32_t i = 0; i < queue.size(); ++i) {
    if (last_seen[queue[i].sender] != i) continue;
    if (out != i) queue[out] = std::move(queue[i]);
    ++out;
  }
  queue.resize(out);
  for (const auto& env : queue) last_seen[env.sender] = kUnseen;
}

std::vector<Envelope> dedup(std::span<const Envelope> queue) {
  std::vector<Envelope> copy(queue.begin(), queue.end());
  NodeId max_sender = 0;
  for (const auto& env : copy) max_sender = std::max(max_sender, env.sender);
  std::vector<std::uint32_t> last_seen(copy.empty() ? 0 : std::size_t{max_sender} + 1, kUnseen);
  dedup_in_place(copy, last_seen);
  return copy;
}

double circular_distance(double a, double b) {
  const double d = std::fabs(a - b);
  return std::min(d, 1.0 - d);
}

RunReport run(const Graph& g, const SimConfig& cfg, NodeLogic& logic, const RunOptions& options) {
  cfg.validate();
  const std::size_t n = g.size();
  if (n == 0) throw std::invalid_argument("cannot simulate an empty graph");

  logic.reset(g, cfg);
  if (options.hook) options.hook->reset(g, cfg);

  std::vector<std::vector<Envelope>> queues(n);
  std::vector<std::uint32_t> last_seen(n, kUnseen);
  std::vector<double> thetas(n);
  std::vector<Color> previous(n);
  std::vector<Color> current(n);
  for (NodeId v = 0; v < n; ++v) previous[v] = logic.color(v);

  RunReport report;
  report.per_round.reserve(cfg.max_rounds);
  Color best_phase1 = 0;

  for (Round r = 1; r <= cfg.max_rounds; ++r) {
    for (NodeId v = 0; v < n; ++v) thetas[v] = logic.theta(v);
    const auto order = event_order(thetas);

    RoundStats stats;
    for (NodeId v : order) {
      auto& queue = queues[v];
      dedup_in_place(queue, last_seen);
      Message msg = logic.fire(v, r, queue);
      queue.clear();
      if (options.hook) options.hook->on_fire(v, r, logic.color(v), msg);
      const Envelope env{v, r, std::move(msg)};
      for (NodeId u : g.neighbors(v)) {
        if (options.hook) options.hook->on_receive(u, env);
        queues[u].push_back(env);
      }
      ++stats.messages;
    }

    for (NodeId v = 0; v < n; ++v) {
      current[v] = logic.color(v);
      stats.max_color = std::max(stats.max_color, current[v]);
      if (current[v] != previous[v]) ++stats.changed;
      stats.max_phase_shift = std::max(stats.max_phase_shift, circular_distance(thetas[v], logic.theta(v)));
    }
    stats.valid = is_valid(g, current);
    report.per_round.push_back(stats);

    if (stats.valid && (!report.found_valid || stats.max_color < report.best_colors)) {
      report.found_valid = true;
      report.best_colors = stats.max_color;
      report.best_round = r;
      report.best_coloring.colors = current;
    }
    if (r <= cfg.phase1_rounds && stats.valid && (best_phase1 == 0 || stats.max_color < best_phase1)) {
      best_phase1 = stats.max_color;
      report.rounds_to_best_phase1 = r;
    }
    if (options.record_snapshots) report.snapshots.push_back(Coloring{current});
    if (options.hook) options.hook->on_round_end(r, current);
    if (options.on_round_end) options.on_round_end(r, current);
    previous.swap(current);
  }

  report.final_coloring.colors = previous;
  return report;
}

}  // namespace frogcolor
