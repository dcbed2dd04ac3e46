#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "frogcolor/baseline.hpp"
#include "frogcolor/bench.hpp"
#include "frogcolor/frogsim.hpp"
#include "frogcolor/generators.hpp"
#include "frogcolor/tracker.hpp"
#include "test_support.hpp"
#include "tracker_oracle.hpp"

using namespace frogcolor;

TEST(BuildTree, PathStarAndClique) {
  const std::vector<Edge> path = {{0, 1}, {1, 2}};
  const auto p = build_tree(Graph::from_edges(3, path));
  EXPECT_EQ(p.root(), 0u);
  EXPECT_EQ(p.height(), 2u);
  EXPECT_EQ(p.depth, (std::vector<std::uint32_t>{0, 1, 2}));
  EXPECT_EQ(p.parent[2], 1u);

  const std::vector<Edge> star = {{3, 0}, {3, 1}, {3, 2}, {3, 4}};
  const auto s = build_tree(Graph::from_edges(5, star));
  EXPECT_EQ(s.root(), 0u);
  EXPECT_EQ(s.height(), 2u);
  EXPECT_EQ(s.parent[3], 0u);
  EXPECT_EQ(s.depth[1], 2u);

  const auto k4 = build_tree(gen_complete_multipartite(std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_EQ(k4.height(), 1u);
  EXPECT_EQ(k4.children[0], (std::vector<NodeId>{1, 2, 3}));
}

TEST(BuildTree, ForestRootsAreComponentMinima) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = oracle::random_graph(30, 0.04, seed, false);
    const auto t = build_tree(g);
    const auto comps = connected_components(g);
    ASSERT_EQ(t.component, comps);
    for (NodeId v = 0; v < g.size(); ++v) {
      const NodeId root = t.roots[t.component[v]];
      ASSERT_LE(root, v);
      if (t.parent[v] == kNoParent) {
        ASSERT_EQ(root, v);
        continue;
      }
      ASSERT_TRUE(g.has_edge(v, t.parent[v]));
      ASSERT_EQ(t.depth[v], t.depth[t.parent[v]] + 1);
      ASSERT_LE(t.depth[v], t.height_of(v));
    }
  }
}

TEST(BuildTree, DepthIsHopDistanceFromRoot) {
  const Graph g = gen_grid(5, 4, false);
  const auto t = build_tree(g);
  for (NodeId v = 0; v < g.size(); ++v) EXPECT_EQ(t.depth[v], v % 5 + v / 5);
  EXPECT_EQ(t.height(), 7u);
}

TEST(HistoryBuffer, KeepsMostRecent) {
  HistoryBuffer h(3);
  EXPECT_FALSE(h.lookup(1));
  for (Round r = 1; r <= 5; ++r) h.push(r, r * 10);
  EXPECT_EQ(h.size(), 3u);
  EXPECT_FALSE(h.lookup(2));
  EXPECT_EQ(h.lookup(3), 30u);
  EXPECT_EQ(h.lookup(5), 50u);
  EXPECT_FALSE(h.lookup(6));
  const std::vector<std::pair<Round, Color>> expected = {{3, 30}, {4, 40}, {5, 50}};
  EXPECT_EQ(h.entries(), expected);
  EXPECT_EQ(HistoryBuffer(0).capacity(), 1u);
}

TEST(HistoryBuffer, CapacityForHeight) {
  EXPECT_EQ(history_capacity(0), 1u);
  EXPECT_EQ(history_capacity(1), 2u);
  EXPECT_EQ(history_capacity(7), 14u);
}

TEST(Convergecast, StepIgnoresOtherRounds) {
  const std::vector<UpReport> kids = {{4, 3}, {5, 9}, {4, 6}};
  EXPECT_EQ(convergecast_step(4, 2, kids), (UpReport{4, 6}));
  EXPECT_EQ(convergecast_step(4, 8, kids), (UpReport{4, 8}));
  EXPECT_EQ(convergecast_step(7, 1, {}), (UpReport{7, 1}));
}

TEST(Convergecast, FoldOverTreeMatchesGlobalMax) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = oracle::random_graph(2 + seed % 50, 0.1, seed, true);
    const auto t = build_tree(g);
    std::mt19937_64 rng(seed);
    std::vector<Color> colors(g.size());
    for (auto& c : colors) c = 1 + rng() % 20;
    std::vector<NodeId> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return t.depth[a] > t.depth[b]; });
    std::vector<UpReport> up(g.size());
    for (NodeId v : order) {
      std::vector<UpReport> kids;
      for (NodeId c : t.children[v]) kids.push_back(up[c]);
      up[v] = convergecast_step(3, colors[v], kids);
    }
    EXPECT_EQ(up[t.root()].color, *std::max_element(colors.begin(), colors.end()));
  }
}

TEST(RootUpdate, StrictImprovementOfValidRounds) {
  BestRecord best;
  EXPECT_TRUE(best.empty());
  EXPECT_FALSE(root_update(best, {1, 4}, false));
  EXPECT_TRUE(best.empty());
  EXPECT_EQ(root_update(best, {2, 5}, true), 2u);
  EXPECT_EQ(best, (BestRecord{5, 2}));
  EXPECT_FALSE(root_update(best, {3, 5}, true));
  EXPECT_FALSE(root_update(best, {4, 3}, false));
  EXPECT_EQ(root_update(best, {5, 3}, true), 5u);
  EXPECT_EQ(best, (BestRecord{3, 5}));
}

TEST(Piggyback, RoundTripAllCombinations) {
  const std::vector<Payload> payloads = {ColoringMessage{0.3, 4, 0.25}, RefinementMessage{2, 123456789012ULL},
                                         BaselineMessage{BaselineStatus::kFinal, 7}};
  const std::vector<TrackerFields> fields = {{}, {UpReport{9, 3}, std::nullopt}, {std::nullopt, 17},
                                             {UpReport{1, 1}, 4000000000u}};
  for (const auto& p : payloads) {
    for (const auto& f : fields) {
      const Message m = piggyback_encode(f, Message{p, {}});
      EXPECT_EQ(m.payload, p);
      EXPECT_EQ(piggyback_decode(m), f);
      EXPECT_EQ(wire_decode(wire_encode(m)), m);
    }
  }
}

TEST(Piggyback, WireRejectsGarbage) {
  WireBytes bytes = wire_encode(Message{ColoringMessage{}, {}});
  bytes[0] = 9;
  EXPECT_THROW(wire_decode(bytes), std::invalid_argument);
  bytes = wire_encode(Message{ColoringMessage{}, {}});
  bytes[1] = 4;
  EXPECT_THROW(wire_decode(bytes), std::invalid_argument);
}

TEST(Piggyback, ConstantSizeAcrossGraphSizes) {
  for (std::size_t n : {10u, 100u, 1000u}) {
    const Graph g = gen_random_geometric(n, 0.2, n);
    SimConfig cfg;
    cfg.max_rounds = 90;
    Tracker tracker;
    FrogSimLogic logic;
    std::size_t checked = 0;
    struct Probe final : MessageHook {
      Tracker* inner;
      std::size_t* checked;
      void reset(const Graph& g, const SimConfig& c) override { inner->reset(g, c); }
      void on_fire(NodeId v, Round r, Color c, Message& m) override {
        inner->on_fire(v, r, c, m);
        const auto bytes = wire_encode(m);
        static_assert(sizeof(bytes) == kWireSize);
        if (!(wire_decode(bytes) == m)) throw std::runtime_error("wire mismatch");
        ++*checked;
      }
      void on_receive(NodeId v, const Envelope& e) override { inner->on_receive(v, e); }
      void on_round_end(Round r, std::span<const Color> c) override { inner->on_round_end(r, c); }
    } probe;
    probe.inner = &tracker;
    probe.checked = &checked;
    RunOptions opts;
    opts.hook = &probe;
    run(g, cfg, logic, opts);
    EXPECT_EQ(checked, n * cfg.max_rounds);
  }
}

namespace {

struct TrackedRun {
  RunReport run;
  TrackerReport tracker;
  TreeInfo tree;
};

TrackedRun tracked(const Graph& g, const SimConfig& cfg, Algorithm algo = Algorithm::kFrogSim) {
  Tracker tracker;
  RunOptions opts;
  opts.record_snapshots = true;
  opts.hook = &tracker;
  RunReport report;
  if (algo == Algorithm::kBaseline) {
    BaselineLogic logic;
    report = run(g, cfg, logic, opts);
  } else {
    FrogSimLogic logic(algo == Algorithm::kFrogSim);
    report = run(g, cfg, logic, opts);
  }
  return {std::move(report), tracker.report(), tracker.tree()};
}

}  // namespace

TEST(Tracker, GridMatchesCentralBest) {
  const Graph g = gen_grid(6, 6, false);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SimConfig cfg;
    cfg.seed = seed;
    const auto t = tracked(g, cfg);
    ASSERT_EQ(oracle::check_tracker(g, t.run, t.tracker, t.tree, cfg.max_rounds, true), "");
    EXPECT_EQ(t.tree.height(), 10u);
    if (t.run.best_round + 2 * t.tree.height() <= cfg.max_rounds) {
      EXPECT_TRUE(t.tracker.complete());
      EXPECT_EQ(t.tracker.best_max_color(), t.run.best_colors);
      EXPECT_EQ(t.tracker.assignment(), t.run.best_coloring);
    }
  }
}

TEST(Tracker, RandomGraphsMatchOracle) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = oracle::random_graph(3 + seed % 60, 0.08, seed, seed % 4 != 0);
    SimConfig cfg;
    cfg.seed = seed;
    const Algorithm algo = seed % 3 == 0 ? Algorithm::kBaseline : Algorithm::kFrogSim;
    const auto t = tracked(g, cfg, algo);
    ASSERT_EQ(oracle::check_tracker(g, t.run, t.tracker, t.tree, cfg.max_rounds, true), "") << "seed " << seed;
    ASSERT_LE(t.tracker.max_history, 2 * std::max<std::size_t>(1, t.tree.height()));
  }
}

TEST(Tracker, DisconnectedComponentsTrackedSeparately) {
  const std::vector<Edge> edges = {{0, 1}, {1, 2}, {4, 5}};
  const Graph g = Graph::from_edges(7, edges);  // nodes 3 and 6 isolated
  SimConfig cfg;
  const auto t = tracked(g, cfg);
  ASSERT_EQ(t.tracker.components.size(), 4u);
  EXPECT_EQ(t.tracker.components[0].root, 0u);
  EXPECT_EQ(t.tracker.components[1].root, 3u);
  EXPECT_EQ(t.tracker.components[1].height, 0u);
  EXPECT_EQ(t.tracker.components[1].updates.front(), (BestUpdate{1, 1, 1}));
  ASSERT_EQ(oracle::check_tracker(g, t.run, t.tracker, t.tree, cfg.max_rounds, true), "");
  EXPECT_TRUE(t.tracker.complete());
  EXPECT_TRUE(is_valid(g, t.tracker.assignment()));
}

TEST(Tracker, UngatedAcceptsInvalidRounds) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = oracle::random_graph(20, 0.2, seed, true);
    SimConfig cfg;
    cfg.seed = seed;
    cfg.validity_gate = false;
    const auto t = tracked(g, cfg);
    ASSERT_EQ(oracle::check_tracker(g, t.run, t.tracker, t.tree, cfg.max_rounds, false), "") << seed;
  }
}

TEST(Tracker, DecisionReachesEveryDepthInTime) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = oracle::random_graph(40, 0.06, seed, true);
    SimConfig cfg;
    cfg.seed = seed;
    Tracker tracker;
    FrogSimLogic logic;
    RunOptions opts;
    opts.hook = &tracker;
    std::vector<TrackerReport> by_round;
    opts.on_round_end = [&](Round, std::span<const Color>) { by_round.push_back(tracker.report()); };
    run(g, cfg, logic, opts);
    const auto& tree = tracker.tree();
    for (const auto& u : by_round.back().components[0].updates) {
      for (NodeId v = 0; v < g.size(); ++v) {
        const Round deadline = u.learned_at + (tree.depth[v] == 0 ? 0 : tree.depth[v] - 1);
        if (deadline > cfg.max_rounds) continue;
        const auto& known = by_round[deadline - 1].known_round[v];
        ASSERT_TRUE(known && *known >= u.round) << "seed " << seed << " node " << v;
      }
    }
  }
}

TEST(Tracker, BenchAttachesTrackerOnRequest) {
  const Graph g = gen_grid(4, 4, false);
  SimConfig cfg;
  cfg.track = true;
  const auto out = run_algorithm(g, cfg, Algorithm::kFrogSim);
  ASSERT_TRUE(out.tracker);
  EXPECT_TRUE(out.tracker->complete());
  EXPECT_EQ(out.tracker->best_max_color(), out.report.best_colors);
  cfg.track = false;
  EXPECT_FALSE(run_algorithm(g, cfg, Algorithm::kFrogSim).tracker);
}
