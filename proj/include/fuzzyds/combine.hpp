#pragma once

#include <cstddef>
#include <vector>

#include "fuzzyds/bpa.hpp"
#include "fuzzyds/core.hpp"

namespace fuzzyds {

struct NormalizedFocal {
  FuzzySet set;      // peak 1
  double retained;   // mass * peak
  double discarded;  // mass * (1 - peak), the share the subnormal set put on the empty set
};

// Rescales a subnormal focal to peak 1 and reduces its mass by the same
// factor, so each alpha-cut keeps the mass it had before scaling. Throws
// EmptyIntersection when the peak is zero.
NormalizedFocal normalize_subnormal(const FuzzySet& set, double mass);

struct PairRecord {
  std::size_t left;   // focal index in the first bpa
  std::size_t right;  // focal index in the second bpa
  double peak;        // max grade of the min-intersection
  double retained;    // peak * m1 * m2, before division by 1 - conflict
};

struct CombinationReport {
  Bpa result;
  double conflict_mass;
  std::vector<PairRecord> pair_log;  // audit only; not part of equality
};

/// Generalized Dempster rule. Each pair's min-intersection is normalized
/// first, then equal normalized sets are merged. Throws TotalConflict when
/// the conflict reaches 1 - eps.
CombinationReport combine(const Bpa& first, const Bpa& second);

/// Cross-validates combine() against the legacy Ishizuka rule: same
/// denominator, same per-pair mass, same focals once the legacy focals are
/// normalized.
bool ishizuka_equivalence_check(const Bpa& first, const Bpa& second);

}  // namespace fuzzyds
