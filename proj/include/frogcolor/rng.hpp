#pragma once

#include <cstdint>
#include <random>

namespace frogcolor {

// SplitMix64 finalizer; used to derive independent stream seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Purpose tags keep the streams of one node independent of each other.
enum class StreamTag : std::uint64_t {
  kTheta = 1,
  kPower = 2,
  kBaseline = 3,
  kGeometric = 4,
};

constexpr std::uint64_t derive_seed(std::uint64_t root, std::uint64_t node, StreamTag tag) {
  return mix64(mix64(root) ^ mix64(node + 0x632be59bd9b4e019ULL) ^
               mix64(static_cast<std::uint64_t>(tag) * 0x8cb92ba72f3d8dd7ULL));
}

// mt19937_64 output is fixed by the standard; the distributions below are
// spelled out so results do not depend on the standard library vendor.
class Stream {
 public:
  Stream() = default;
  explicit Stream(std::uint64_t seed) : engine_(seed) {}
  Stream(std::uint64_t root, std::uint64_t node, StreamTag tag) : engine_(derive_seed(root, node, tag)) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [lo, hi], unbiased by rejection.
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo;
    if (span == ~std::uint64_t{0}) return next();
    const std::uint64_t range = span + 1;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return lo + x % range;
  }

 private:
  std::mt19937_64 engine_{0};
};

}  // namespace frogcolor
