#pragma once

#include <cstdint>
#include <vector>

#include "fuzzyds/belief.hpp"
#include "fuzzyds/bpa.hpp"
#include "fuzzyds/core.hpp"

// Brute-force check of belief/plausibility as the optimum of the allocation
// linear program: every decomposed crisp focal spreads its mass over the
// members of its cut, and the objective is sum m(x : A_j) * mu_B(x).
namespace fuzzyds::oracle {

inline constexpr std::uint64_t kVertexGuard = 1'000'000;

// One decomposed crisp focal: the cut members (frame indices) and its mass.
struct CrispPiece {
  std::vector<std::size_t> members;
  double mass;
};

/// Decomposes every focal; throws TooLarge when the product of cut sizes
/// exceeds kVertexGuard.
std::vector<CrispPiece> decomposed_pieces(const Bpa& bpa);

struct OracleSolution {
  BeliefInterval interval;     // min / max over the full vertex product
  double separable_min;        // sum of per-piece minima
  double separable_max;        // sum of per-piece maxima
  std::uint64_t vertices;      // number of allocations enumerated
};

OracleSolution oracle_solve(const Bpa& bpa, const FuzzySet& query);
BeliefInterval oracle_bel_pls(const Bpa& bpa, const FuzzySet& query);

// Objective values of `count` random feasible allocations. Each piece's mass
// is split over its cut by a flat Dirichlet draw (normalized exponential
// spacings) from a generator seeded with `seed`.
std::vector<double> sample_feasible(const Bpa& bpa, const FuzzySet& query, std::size_t count,
                                    std::uint64_t seed);

}  // namespace fuzzyds::oracle
