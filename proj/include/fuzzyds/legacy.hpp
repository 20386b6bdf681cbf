#pragma once

#include <optional>
#include <string_view>

#include "fuzzyds/bpa.hpp"
#include "fuzzyds/core.hpp"

// Earlier fuzzy extensions of evidence theory, kept for comparison with the
// decomposition-based belief in belief.hpp.
namespace fuzzyds::legacy {

enum class MeasureKind { Ishizuka, Yager, Ogawa };

std::string_view to_string(MeasureKind kind);
std::optional<MeasureKind> parse_measure_kind(std::string_view name);

/// Zadeh: sum_i m(A_i) * max_x min(mu_B(x), mu_Ai(x)).
double expected_possibility(const Bpa& bpa, const FuzzySet& query);
/// Zadeh: 1 - expected_possibility(complement(query)).
double expected_certainty(const Bpa& bpa, const FuzzySet& query);

// Degree to which `a` is included in `b`, in [0, 1].
//   Ishizuka: min_x min(1, 1 + mu_B - mu_A) / max_x mu_A   (clamped to 1)
//   Yager:    min_x max(1 - mu_A, mu_B)
//   Ogawa:    sum_x min(mu_A, mu_B) / sum_x mu_A
// Throws EmptySet for an all-zero `a`.
double inclusion(MeasureKind kind, const FuzzySet& a, const FuzzySet& b);

/// sum_i I(A_i in B) * m(A_i).
double bel_via_inclusion(MeasureKind kind, const Bpa& bpa, const FuzzySet& query);

/// J(A, B) = max_x mu_{A and B}(x) / min(max mu_A, max mu_B).
double intersection_degree(const FuzzySet& a, const FuzzySet& b);

struct IshizukaReport {
  Bpa result;           // raw min-intersections, possibly subnormal
  double conflict_mass; // sum (1 - J) m1 m2
};

IshizukaReport ishizuka_combine_detailed(const Bpa& first, const Bpa& second);
Bpa ishizuka_combine(const Bpa& first, const Bpa& second);

}  // namespace fuzzyds::legacy
