#pragma once

#include <span>

#include "frogcolor/config.hpp"
#include "frogcolor/messages.hpp"

namespace frogcolor {

// Piecewise-linear repulsion: x - 0.5 for x >= 0, x + 0.5 otherwise.
double inc(double x);

// Maps any real into [0, 1).
double wrap_unit(double x);
// Maps any real into [-0.5, 0.5).
double wrap_centered(double x);

// Gap fed to the kernel for a node at `own` hearing a phase `heard`.
// FROG_INC takes the raw difference heard - own in (-1, 1). The sine
// kernels take own - heard centered into [-0.5, 0.5), so that a positive
// shift moves the node away from the emitter.
double kernel_gap(Kernel k, double own, double heard);

// alpha * shape(x), where shape is inc, sin(2 pi x) / (2 pi), or the sine
// damped by exp(-2 pi min(|x|, 1 - |x|)).
double kernel_eval(Kernel k, double x, double alpha);

// theta + sum over inbox of relevance * kernel_eval(gap), wrapped into
// [0, 1). Messages without a ColoringMessage payload are skipped.
double recalc_theta(double theta, double alpha, std::span<const Envelope> inbox, Kernel k);

}  // namespace frogcolor
