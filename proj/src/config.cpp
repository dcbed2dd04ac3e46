#include "frogcolor/config.hpp"

#include <stdexcept>

namespace frogcolor {

std::string_view kernel_name(Kernel k) {
  switch (k) {
    case Kernel::kFrogInc:
      return "inc";
    case Kernel::kAiharaSin:
      return "sin";
    case Kernel::kMutazono:
      return "mutazono";
  }
  return "?";
}

Kernel parse_kernel(std::string_view name) {
  if (name == "inc") return Kernel::kFrogInc;
  if (name == "sin") return Kernel::kAiharaSin;
  if (name == "mutazono") return Kernel::kMutazono;
  throw std::invalid_argument("unknown kernel '" + std::string(name) + "' (expected inc, sin or mutazono)");
}

void SimConfig::validate() const {
  if (phase1_rounds == 0 || phase1_rounds > max_rounds) {
    throw std::invalid_argument("phase-I round count must satisfy 0 < K <= max_rounds");
  }
  if (!(rho > 1.0)) throw std::invalid_argument("rho must be > 1");
  if (!(alpha0 > 0.0)) throw std::invalid_argument("alpha0 must be > 0");
  if (power_max < 1) throw std::invalid_argument("power_max must be >= 1");
}

}  // namespace frogcolor
