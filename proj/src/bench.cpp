#include "frogcolor/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "frogcolor/baseline.hpp"
#include "frogcolor/frogsim.hpp"

namespace frogcolor {

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kFrogSim:
      return "frogsim";
    case Algorithm::kFrogSimMinus:
      return "frogsim-minus";
    case Algorithm::kBaseline:
      return "baseline-rnd";
  }
  return "?";
}

std::vector<Algorithm> parse_algorithms(std::string_view list) {
  std::vector<Algorithm> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = std::min(list.find(',', start), list.size());
    const auto name = list.substr(start, comma - start);
    if (name == "frogsim") {
      out.push_back(Algorithm::kFrogSim);
    } else if (name == "frogsim-minus") {
      out.push_back(Algorithm::kFrogSimMinus);
    } else if (name == "baseline-rnd") {
      out.push_back(Algorithm::kBaseline);
    } else {
      throw std::invalid_argument("unknown algorithm '" + std::string(name) +
                                  "' (expected frogsim, frogsim-minus or baseline-rnd)");
    }
    start = comma + 1;
  }
  return out;
}

AlgoRun run_algorithm(const Graph& g, const SimConfig& cfg, Algorithm algo, RunOptions options) {
  SimConfig c = cfg;
  std::optional<Tracker> tracker;
  if (cfg.track) {
    tracker.emplace();
    options.hook = &*tracker;
  }
  AlgoRun out;
  switch (algo) {
    case Algorithm::kFrogSim: {
      FrogSimLogic logic(true);
      out.report = run(g, c, logic, options);
      break;
    }
    case Algorithm::kFrogSimMinus: {
      c.max_rounds = c.phase1_rounds;
      FrogSimLogic logic(false);
      out.report = run(g, c, logic, options);
      break;
    }
    case Algorithm::kBaseline: {
      BaselineLogic logic;
      out.report = run(g, c, logic, options);
      break;
    }
  }
  if (tracker) out.tracker = tracker->report();
  return out;
}

RoundsToBest rounds_to_best_stats(std::span<const RunReport> reports, std::uint32_t phase1_rounds) {
  RoundsToBest s;
  if (reports.empty()) return s;
  double phase1 = 0.0;
  double phase2 = 0.0;
  double overall = 0.0;
  for (const auto& r : reports) {
    phase1 += r.rounds_to_best_phase1;
    overall += r.best_round;
    if (r.best_round > phase1_rounds) {
      phase2 += r.best_round - phase1_rounds;
      ++s.phase2_runs;
    }
  }
  const auto count = static_cast<double>(reports.size());
  s.phase1_mean = phase1 / count;
  s.overall_mean = overall / count;
  if (s.phase2_runs > 0) s.phase2_offset_mean = phase2 / static_cast<double>(s.phase2_runs);
  return s;
}

namespace {

// Orders cells by best colors, then by average; cells without any valid run
// rank last.
int compare_cells(const CellStats& a, const CellStats& b) {
  if ((a.runs == 0) != (b.runs == 0)) return a.runs == 0 ? 1 : -1;
  if (a.runs == 0) return 0;
  if (a.best != b.best) return a.best < b.best ? -1 : 1;
  const std::uint64_t lhs = a.total_colors * b.runs;
  const std::uint64_t rhs = b.total_colors * a.runs;
  if (lhs != rhs) return lhs < rhs ? -1 : 1;
  return 0;
}

std::vector<std::size_t> extremes(const TableRow& row, int sign) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < row.cells.size(); ++i) {
    if (out.empty()) {
      out.push_back(i);
      continue;
    }
    const int c = compare_cells(row.cells[i], row.cells[out.front()]) * sign;
    if (c < 0) out = {i};
    else if (c == 0) out.push_back(i);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> winners(const TableRow& row) { return extremes(row, 1); }

Summary summarize(std::span<const TableRow> rows, std::span<const Algorithm> algorithms) {
  Summary s;
  const std::size_t k = algorithms.size();
  s.algorithms.assign(algorithms.begin(), algorithms.end());
  s.better.assign(k, 0);
  s.all_equal.assign(k, 0);
  s.worse.assign(k, 0);
  s.mean_best.assign(k, 0.0);
  s.mean_avg.assign(k, 0.0);
  std::vector<std::uint32_t> counted(k, 0);

  for (const auto& row : rows) {
    if (row.error || row.cells.size() != k) continue;
    ++s.rows;
    for (std::size_t i = 0; i < k; ++i) {
      if (row.cells[i].runs == 0) continue;
      s.mean_best[i] += row.cells[i].best;
      s.mean_avg[i] += row.cells[i].avg();
      ++counted[i];
    }
    const auto best = winners(row);
    if (best.size() == k) {
      for (auto& c : s.all_equal) ++c;
      continue;
    }
    if (best.size() == 1) ++s.better[best.front()];
    const auto worst = extremes(row, -1);
    if (worst.size() == 1) ++s.worse[worst.front()];
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (counted[i] == 0) continue;
    s.mean_best[i] /= counted[i];
    s.mean_avg[i] /= counted[i];
  }
  return s;
}

std::string normalize_instance_name(std::string_view instance) {
  const auto slash = instance.find_last_of('/');
  if (slash != std::string_view::npos) instance.remove_prefix(slash + 1);
  if (instance.ends_with(".col")) instance.remove_suffix(4);
  std::string out(instance);
  for (char& ch : out) {
    ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (ch == '-') ch = '_';
  }
  return out;
}

std::optional<std::uint32_t> known_chromatic(std::string_view instance) {
  static const std::map<std::string, std::uint32_t, std::less<>> table = {
      {"2_partite_size6", 2}, {"3_partite_3_diff_sizes", 3}, {"3_partite_size_6", 3}, {"3partite6", 3},
      {"4_partite_4_diff_sizes", 4}, {"7partite2", 7}, {"triangles3", 3},
      {"anna", 11},        {"david", 11},       {"dodecahedron", 3}, {"flat1000_50_0", 50}, {"flat1000_60_0", 60},
      {"flat1000_76_0", 76}, {"flat300_20_0", 20}, {"flat300_26_0", 26}, {"flat300_28_0", 28}, {"fpsol2.i.1", 65},
      {"fpsol2.i.2", 30},  {"fpsol2.i.3", 30},  {"games120", 9},     {"homer", 13},       {"huck", 11},
      {"icosahedron", 4},  {"inithx.i.1", 54},  {"inithx.i.2", 31},  {"inithx.i.3", 31},  {"ising32x8", 2},
      {"ising32x8_torus", 2}, {"jean", 10},     {"le450_15a", 15},   {"le450_15b", 15},   {"le450_15c", 15},
      {"le450_15d", 15},   {"le450_25a", 25},   {"le450_25b", 25},   {"le450_25c", 25},   {"le450_25d", 25},
      {"le450_5a", 5},     {"le450_5b", 5},     {"le450_5c", 5},     {"le450_5d", 5},     {"miles1000", 42},
      {"miles1500", 73},   {"miles250", 8},     {"miles500", 20},    {"miles750", 31},    {"mulsol.i.1", 49},
      {"mulsol.i.2", 31},  {"mulsol.i.3", 31},  {"mulsol.i.4", 31},  {"mulsol.i.5", 31},  {"myciel2", 3},
      {"myciel3", 4},      {"myciel4", 5},      {"myciel5", 6},      {"myciel6", 7},      {"myciel7", 8},
      {"petersen", 3},     {"peterson", 3},     {"queen11_11", 11},  {"queen13_13", 13},  {"queen5_5", 5},
      {"queen6_6", 7},     {"queen7_7", 7},     {"queen8_12", 12},   {"queen8_8", 9},     {"queen9_9", 10},
      {"zeroin.i.1", 49},  {"zeroin.i.2", 30},  {"zeroin.i.3", 30},
  };
  const std::string key = normalize_instance_name(instance);
  if (auto it = table.find(key); it != table.end()) return it->second;

  // gridWxH: bipartite, a single node needs one color.
  std::size_t w = 0;
  std::size_t h = 0;
  char x = 0;
  std::istringstream in(key.starts_with("grid") ? key.substr(4) : std::string());
  if (in >> w >> x >> h && x == 'x' && in.peek() == std::char_traits<char>::eof() && w >= 1 && h >= 1) {
    return w * h == 1 ? 1u : 2u;
  }
  return std::nullopt;
}

unsigned bench_threads_from_env() {
  if (const char* env = std::getenv("COLOR_BENCH_THREADS")) {
    unsigned value = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc{} && ptr == s.data() + s.size() && value >= 1) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

BenchResult run_bench(const BenchSpec& spec, unsigned threads) {
  if (spec.repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
  if (spec.instances.empty()) throw std::invalid_argument("bench needs at least one instance");
  if (spec.algorithms.empty()) throw std::invalid_argument("bench needs at least one algorithm");
  spec.cfg.validate();

  BenchResult result;
  std::vector<Graph> graphs(spec.instances.size());
  result.rows.resize(spec.instances.size());
  for (std::size_t i = 0; i < spec.instances.size(); ++i) {
    auto& row = result.rows[i];
    row.instance = spec.instances[i].name;
    row.chromatic = known_chromatic(row.instance);
    try {
      graphs[i] = materialize(spec.instances[i]);
      if (graphs[i].size() == 0) throw std::invalid_argument("instance has no nodes");
      row.n = graphs[i].size();
      row.max_degree = graphs[i].max_degree();
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  }

  struct Job {
    std::size_t instance;
    std::size_t algo;
    std::uint32_t rep;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (result.rows[i].error) continue;
    for (std::size_t a = 0; a < spec.algorithms.size(); ++a) {
      for (std::uint32_t j = 0; j < spec.repetitions; ++j) jobs.push_back({i, a, j});
    }
  }

  std::vector<RunReport> reports(jobs.size());
  std::vector<std::string> failures(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < jobs.size();) {
      const Job& job = jobs[k];
      SimConfig cfg = spec.cfg;
      cfg.seed = spec.cfg.seed + job.rep;
      try {
        RunReport r = run_algorithm(graphs[job.instance], cfg, spec.algorithms[job.algo]).report;
        r.per_round.clear();
        r.per_round.shrink_to_fit();
        r.final_coloring = {};
        r.best_coloring = {};
        reports[k] = std::move(r);
      } catch (const std::exception& e) {
        failures[k] = e.what();
      }
    }
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }

  std::vector<RunReport> frog_pool;
  std::size_t k = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    auto& row = result.rows[i];
    if (row.error) continue;
    for (std::size_t a = 0; a < spec.algorithms.size(); ++a) {
      CellStats cell;
      cell.algo = spec.algorithms[a];
      std::vector<RunReport> cell_reports;
      for (std::uint32_t j = 0; j < spec.repetitions; ++j, ++k) {
        if (!failures[k].empty()) {
          if (!row.error) row.error = failures[k];
          continue;
        }
        const RunReport& r = reports[k];
        if (!r.found_valid) {
          ++cell.failed_runs;
          continue;
        }
        cell.best = cell.runs == 0 ? r.best_colors : std::min(cell.best, r.best_colors);
        cell.total_colors += r.best_colors;
        ++cell.runs;
        cell_reports.push_back(r);
      }
      cell.rounds = rounds_to_best_stats(cell_reports, spec.cfg.phase1_rounds);
      if (cell.algo == Algorithm::kFrogSim) frog_pool.insert(frog_pool.end(), cell_reports.begin(), cell_reports.end());
      row.cells.push_back(cell);
    }
  }
  result.summary = summarize(result.rows, spec.algorithms);
  if (!frog_pool.empty()) result.frogsim_rounds = rounds_to_best_stats(frog_pool, spec.cfg.phase1_rounds);
  return result;
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string chromatic_text(const std::optional<std::uint32_t>& chi) { return chi ? std::to_string(*chi) : "?"; }

std::string fixed3(double x) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << x;
  return s.str();
}

}  // namespace

void emit_csv(std::span<const TableRow> rows, std::ostream& out) {
  out << "instance,n,max_degree,chromatic,algo,best,avg,avg_rounds_to_best\n";
  for (const auto& row : rows) {
    if (row.error) continue;
    for (const auto& cell : row.cells) {
      out << csv_field(row.instance) << ',' << row.n << ',' << row.max_degree << ',' << chromatic_text(row.chromatic)
          << ',' << algorithm_name(cell.algo) << ',' << cell.best << ',' << format_double(cell.avg()) << ','
          << format_double(cell.rounds.overall_mean) << '\n';
    }
  }
}

void emit_table(const BenchResult& result, std::ostream& out) {
  const auto& algos = result.summary.algorithms;
  std::size_t name_width = 8;
  for (const auto& row : result.rows) name_width = std::max(name_width, row.instance.size());

  out << std::left << std::setw(static_cast<int>(name_width)) << "instance" << "  " << std::setw(16) << "(n,D,chi)";
  for (Algorithm a : algos) out << "  " << std::right << std::setw(18) << algorithm_name(a) << std::left;
  out << '\n' << std::string(name_width + 18 + 20 * algos.size(), '-') << '\n';

  for (const auto& row : result.rows) {
    out << std::left << std::setw(static_cast<int>(name_width)) << row.instance << "  ";
    if (row.error) {
      out << "error: " << *row.error << '\n';
      continue;
    }
    std::ostringstream triple;
    triple << '(' << row.n << ',' << row.max_degree << ',' << chromatic_text(row.chromatic) << ')';
    out << std::setw(16) << triple.str();
    const auto best = winners(row);
    for (std::size_t i = 0; i < row.cells.size(); ++i) {
      const auto& cell = row.cells[i];
      const bool marked = std::find(best.begin(), best.end(), i) != best.end();
      std::ostringstream text;
      if (cell.runs == 0) {
        text << "-";
      } else {
        text << (marked ? "*" : "") << cell.best << "  " << fixed3(cell.avg());
      }
      out << "  " << std::right << std::setw(18) << text.str() << std::left;
    }
    out << '\n';
  }

  const auto& s = result.summary;
  out << std::string(name_width + 18 + 20 * algos.size(), '-') << '\n';
  auto line = [&](const std::string& label, auto&& cell_text) {
    out << std::left << std::setw(static_cast<int>(name_width + 18)) << label;
    for (std::size_t i = 0; i < algos.size(); ++i) out << "  " << std::right << std::setw(18) << cell_text(i) << std::left;
    out << '\n';
  };
  line("average", [&](std::size_t i) { return fixed3(s.mean_best[i]) + "  " + fixed3(s.mean_avg[i]); });
  line("# times better", [&](std::size_t i) { return std::to_string(s.better[i]); });
  line("# times all equal", [&](std::size_t i) { return std::to_string(s.all_equal[i]); });
  line("# times worse", [&](std::size_t i) { return std::to_string(s.worse[i]); });

  if (result.frogsim_rounds) {
    const auto& r = *result.frogsim_rounds;
    out << "\nfrogsim rounds to best: phase I " << fixed3(r.phase1_mean) << ", phase II offset "
        << fixed3(r.phase2_offset_mean) << " (" << r.phase2_runs << " runs), overall " << fixed3(r.overall_mean)
        << "  [reference 10.34 / 3.46 / 24.33]\n";
  }
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    any = true;
    if (quoted) {
      if (ch == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        field += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      record.push_back(std::move(field));
      field.clear();
    } else if (ch == '\n') {
      record.push_back(std::move(field));
      field.clear();
      records.push_back(std::move(record));
      record.clear();
      any = false;
    } else if (ch != '\r') {
      field += ch;
    }
  }
  if (any) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace frogcolor
