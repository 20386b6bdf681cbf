#pragma once

#include <cmath>

namespace fuzzyds {

inline constexpr double kDefaultEpsilon = 1e-9;

/// Global comparison tolerance used by every threshold and equality test.
double epsilon() noexcept;

/// Overrides the tolerance. Intended to be called once at startup (the CLI
/// honours FE_EPSILON); changing it while other threads compute is a race on
/// results, not on memory.
void set_epsilon(double eps);

inline bool approx_equal(double a, double b) noexcept {
  return std::fabs(a - b) <= epsilon();
}

}  // namespace fuzzyds
