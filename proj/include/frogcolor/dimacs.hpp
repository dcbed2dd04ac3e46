#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "frogcolor/graph.hpp"

namespace frogcolor {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Reads the DIMACS `.col` edge format: `c` comment lines, a single
// `p edge <n> <m>` problem line (`p col` is accepted too) and `e <u> <v>`
// lines with 1-based node ids. Duplicate edges collapse silently; the edge
// count announced on the problem line is not enforced.
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs(std::string_view text);
Graph load_dimacs(const std::filesystem::path& path);

// Writes `p edge n m` followed by one `e u v` line per edge (u < v, 1-based).
std::string to_dimacs(const Graph& g);

}  // namespace frogcolor
