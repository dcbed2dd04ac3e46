#include "frogcolor/kernel.hpp"

#include <cmath>
#include <algorithm>
#include <numbers>

namespace frogcolor {

double inc(double x) { return x >= 0.0 ? x - 0.5 : x + 0.5; }

double wrap_unit(double x) {
  double w = x - std::floor(x);
  // x slightly below an integer can round up to exactly 1.
  if (w >= 1.0) w = 0.0;
  return w;
}

double wrap_centered(double x) { return wrap_unit(x + 0.5) - 0.5; }

double kernel_gap(Kernel k, double own, double heard) {
  if (k == Kernel::kFrogInc) return heard - own;
  return wrap_centered(own - heard);
}

double kernel_eval(Kernel k, double x, double alpha) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  switch (k) {
    case Kernel::kFrogInc:
      return alpha * inc(x);
    case Kernel::kAiharaSin:
      return alpha * std::sin(two_pi * x) / two_pi;
    case Kernel::kMutazono: {
      const double a = std::fabs(x);
      return alpha * std::sin(two_pi * x) / two_pi * std::exp(-two_pi * std::min(a, 1.0 - a));
    }
  }
  return 0.0;
}

double recalc_theta(double theta, double alpha, std::span<const Envelope> inbox, Kernel k) {
  double shift = 0.0;
  for (const auto& env : inbox) {
    const auto* m = std::get_if<ColoringMessage>(&env.message.payload);
    if (!m) continue;
    shift += m->relevance * kernel_eval(k, kernel_gap(k, theta, m->theta), alpha);
  }
  return wrap_unit(theta + shift);
}

}  // namespace frogcolor
