#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>
#include <variant>
#include <vector>

#include "frogcolor/graph.hpp"

namespace frogcolor {

struct FileSource {
  std::filesystem::path path;
};
struct GridSource {
  std::size_t width = 1;
  std::size_t height = 1;
  bool torus = false;
};
struct GeometricSource {
  std::size_t n = 1;
  double radius = 0.05;
  std::uint64_t seed = 0;
};
struct TrianglesSource {
  std::size_t inner = 1;
};
struct MycielskiSource {
  std::size_t order = 2;
};
struct QueenSource {
  std::size_t width = 1;
  std::size_t height = 1;
};
struct MultipartiteSource {
  std::vector<std::size_t> parts;
};

using InstanceSource = std::variant<FileSource, GridSource, GeometricSource, TrianglesSource, MycielskiSource,
                                    QueenSource, MultipartiteSource>;

struct InstanceSpec {
  std::string name;
  InstanceSource source;
};

// One instance per line:
//   instance <name> file <path>
//   instance <name> grid <w> <h> [torus]
//   instance <name> geometric <n> <r> <seed>
//   instance <name> triangles <k>
//   instance <name> mycielski <k>
//   instance <name> queen <w> <h>
//   instance <name> multipartite <a,b,...>
// Blank lines and lines starting with '#' are ignored. Relative file paths
// resolve against base_dir. Syntax errors throw ParseError.
std::vector<InstanceSpec> parse_manifest(std::istream& in, const std::filesystem::path& base_dir);
std::vector<InstanceSpec> load_manifest(const std::filesystem::path& path);

// Builds or loads the graph. Throws on unreadable files or bad parameters.
Graph materialize(const InstanceSpec& spec);

}  // namespace frogcolor
