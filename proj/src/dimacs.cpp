#include "frogcolor/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace frogcolor {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::uint64_t parse_count(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph parse_dimacs(std::istream& in) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    const auto kind = tokens[0];

    if (kind == "c") continue;

    if (kind == "p") {
      if (n) throw ParseError(line_no, "duplicate problem line");
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col")) {
        throw ParseError(line_no, "malformed problem line, expected 'p edge <n> <m>'");
      }
      n = parse_count(tokens[2], line_no);
      edges.reserve(parse_count(tokens[3], line_no));
      continue;
    }

    if (kind == "e") {
      if (!n) throw ParseError(line_no, "edge line before problem line");
      if (tokens.size() != 3) throw ParseError(line_no, "malformed edge line, expected 'e <u> <v>'");
      const auto u = parse_count(tokens[1], line_no);
      const auto v = parse_count(tokens[2], line_no);
      if (u < 1 || u > *n || v < 1 || v > *n) {
        throw ParseError(line_no, "node id out of range 1.." + std::to_string(*n));
      }
      if (u == v) throw ParseError(line_no, "self-loop on node " + std::to_string(u));
      edges.emplace_back(static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1));
      continue;
    }

    throw ParseError(line_no, "unknown line type '" + std::string(kind) + "'");
  }

  if (!n) throw ParseError(line_no, "missing problem line");
  return Graph::from_edges(*n, edges);
}

Graph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

Graph load_dimacs(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_dimacs(in);
}

std::string to_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.size()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  }
  return out;
}

}  // namespace frogcolor
