#include "frogcolor/manifest.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "frogcolor/dimacs.hpp"
#include "frogcolor/generators.hpp"

namespace frogcolor {
namespace {

template <typename T>
T parse_number(const std::string& token, std::size_t line_no) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line_no, "bad number '" + token + "'");
  }
  return value;
}

void expect_args(const std::vector<std::string>& t, std::size_t lo, std::size_t hi, std::size_t line_no) {
  const std::size_t args = t.size() - 3;
  if (args < lo || args > hi) throw ParseError(line_no, "wrong argument count for source '" + t[2] + "'");
}

InstanceSource parse_source(const std::vector<std::string>& t, std::size_t line_no, const std::filesystem::path& base) {
  const std::string& kind = t[2];
  if (kind == "file") {
    expect_args(t, 1, 1, line_no);
    std::filesystem::path p(t[3]);
    return FileSource{p.is_absolute() ? p : base / p};
  }
  if (kind == "grid") {
    expect_args(t, 2, 3, line_no);
    bool torus = false;
    if (t.size() == 6) {
      if (t[5] != "torus") throw ParseError(line_no, "expected 'torus', got '" + t[5] + "'");
      torus = true;
    }
    return GridSource{parse_number<std::size_t>(t[3], line_no), parse_number<std::size_t>(t[4], line_no), torus};
  }
  if (kind == "geometric") {
    expect_args(t, 3, 3, line_no);
    return GeometricSource{parse_number<std::size_t>(t[3], line_no), parse_number<double>(t[4], line_no),
                           parse_number<std::uint64_t>(t[5], line_no)};
  }
  if (kind == "triangles") {
    expect_args(t, 1, 1, line_no);
    return TrianglesSource{parse_number<std::size_t>(t[3], line_no)};
  }
  if (kind == "mycielski") {
    expect_args(t, 1, 1, line_no);
    return MycielskiSource{parse_number<std::size_t>(t[3], line_no)};
  }
  if (kind == "queen") {
    expect_args(t, 2, 2, line_no);
    return QueenSource{parse_number<std::size_t>(t[3], line_no), parse_number<std::size_t>(t[4], line_no)};
  }
  if (kind == "multipartite") {
    expect_args(t, 1, 1, line_no);
    MultipartiteSource src;
    std::stringstream parts(t[3]);
    std::string part;
    while (std::getline(parts, part, ',')) src.parts.push_back(parse_number<std::size_t>(part, line_no));
    return src;
  }
  throw ParseError(line_no, "unknown instance source '" + kind + "'");
}

struct Builder {
  Graph operator()(const FileSource& s) const { return load_dimacs(s.path); }
  Graph operator()(const GridSource& s) const { return gen_grid(s.width, s.height, s.torus); }
  Graph operator()(const GeometricSource& s) const { return gen_random_geometric(s.n, s.radius, s.seed); }
  Graph operator()(const TrianglesSource& s) const { return gen_triangle_composition(s.inner); }
  Graph operator()(const MycielskiSource& s) const { return gen_mycielski(s.order); }
  Graph operator()(const QueenSource& s) const { return gen_queen(s.width, s.height); }
  Graph operator()(const MultipartiteSource& s) const { return gen_complete_multipartite(s.parts); }
};

}  // namespace

std::vector<InstanceSpec> parse_manifest(std::istream& in, const std::filesystem::path& base_dir) {
  std::vector<InstanceSpec> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::vector<std::string> t;
    for (std::string w; words >> w;) t.push_back(w);
    if (t.empty() || t[0].starts_with('#')) continue;
    if (t[0] != "instance") throw ParseError(line_no, "expected 'instance', got '" + t[0] + "'");
    if (t.size() < 3) throw ParseError(line_no, "instance line needs a name and a source");
    out.push_back(InstanceSpec{t[1], parse_source(t, line_no, base_dir)});
  }
  return out;
}

std::vector<InstanceSpec> load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest " + path.string());
  return parse_manifest(in, path.parent_path());
}

Graph materialize(const InstanceSpec& spec) { return std::visit(Builder{}, spec.source); }

}  // namespace frogcolor
