#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace frogcolor {

enum class Kernel { kFrogInc, kAiharaSin, kMutazono };

std::string_view kernel_name(Kernel k);
// Accepts "inc", "sin" and "mutazono". Throws std::invalid_argument otherwise.
Kernel parse_kernel(std::string_view name);

struct SimConfig {
  std::uint32_t max_rounds = 100;
  std::uint32_t phase1_rounds = 80;
  double alpha0 = 0.5;
  double rho = 1.05;
  Kernel kernel = Kernel::kFrogInc;
  std::uint64_t power_max = 2147483647;
  std::uint64_t seed = 42;
  bool track = false;
  bool validity_gate = true;

  // Throws std::invalid_argument unless 0 < phase1_rounds <= max_rounds,
  // rho > 1, alpha0 > 0 and power_max >= 1.
  void validate() const;
};

}  // namespace frogcolor
