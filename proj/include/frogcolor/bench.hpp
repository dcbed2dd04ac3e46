#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frogcolor/config.hpp"
#include "frogcolor/engine.hpp"
#include "frogcolor/manifest.hpp"
#include "frogcolor/tracker.hpp"

namespace frogcolor {

enum class Algorithm { kFrogSim, kFrogSimMinus, kBaseline };

std::string_view algorithm_name(Algorithm a);
// Comma-separated list of frogsim, frogsim-minus, baseline-rnd.
std::vector<Algorithm> parse_algorithms(std::string_view list);

struct AlgoRun {
  RunReport report;
  std::optional<TrackerReport> tracker;
};

// One run. frogsim-minus stops after the K desynchronization rounds; the
// tracker is attached when cfg.track is set.
AlgoRun run_algorithm(const Graph& g, const SimConfig& cfg, Algorithm algo, RunOptions options = {});

struct RoundsToBest {
  double phase1_mean = 0.0;
  // Mean of best_round - K over the runs whose best lies past round K.
  double phase2_offset_mean = 0.0;
  std::size_t phase2_runs = 0;
  double overall_mean = 0.0;
};

RoundsToBest rounds_to_best_stats(std::span<const RunReport> reports, std::uint32_t phase1_rounds);

struct CellStats {
  Algorithm algo = Algorithm::kFrogSim;
  Color best = 0;
  std::uint64_t total_colors = 0;
  std::uint32_t runs = 0;  // runs that produced a valid coloring
  std::uint32_t failed_runs = 0;
  RoundsToBest rounds;

  double avg() const { return runs == 0 ? 0.0 : static_cast<double>(total_colors) / runs; }
};

struct TableRow {
  std::string instance;
  std::size_t n = 0;
  std::size_t max_degree = 0;
  std::optional<std::uint32_t> chromatic;
  std::vector<CellStats> cells;  // one per algorithm, in BenchSpec order
  std::optional<std::string> error;
};

// Cells attaining the lexicographic minimum of (best, avg).
std::vector<std::size_t> winners(const TableRow& row);

struct Summary {
  std::vector<Algorithm> algorithms;
  std::vector<std::uint32_t> better;
  std::vector<std::uint32_t> all_equal;
  std::vector<std::uint32_t> worse;
  std::vector<double> mean_best;
  std::vector<double> mean_avg;
  std::uint32_t rows = 0;
};

// Error rows are skipped.
Summary summarize(std::span<const TableRow> rows, std::span<const Algorithm> algorithms);

struct BenchSpec {
  std::vector<InstanceSpec> instances;
  std::vector<Algorithm> algorithms;
  std::uint32_t repetitions = 100;
  SimConfig cfg;
};

struct BenchResult {
  std::vector<TableRow> rows;
  Summary summary;
  // Pooled over all frogsim runs of all instances; absent without frogsim.
  std::optional<RoundsToBest> frogsim_rounds;
};

// Runs seeds cfg.seed + 0 .. cfg.seed + R - 1 for every (instance,
// algorithm). Output does not depend on `threads`.
BenchResult run_bench(const BenchSpec& spec, unsigned threads);

// Reads COLOR_BENCH_THREADS; falls back to the hardware thread count.
unsigned bench_threads_from_env();

// Known chromatic numbers keyed by normalized instance name.
std::optional<std::uint32_t> known_chromatic(std::string_view instance);
// Lowercase, no directory or ".col" suffix, '-' replaced by '_'.
std::string normalize_instance_name(std::string_view instance);

void emit_csv(std::span<const TableRow> rows, std::ostream& out);
void emit_table(const BenchResult& result, std::ostream& out);
// Splits CSV text into records of fields; understands double-quoted fields.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

// Shortest representation that reads back to the same double.
std::string format_double(double x);

}  // namespace frogcolor
