#pragma once

#include <string>

#include "fuzzyds/bpa.hpp"
#include "fuzzyds/core.hpp"

namespace fuzzyds {

// [bel, pls]: the range of the query's probability under the bpa's
// constraints.
struct BeliefInterval {
  double bel;
  double pls;

  BeliefInterval(double bel, double pls);
};

/// Least mass a focal can place on `query`: each level's share of `mass` goes
/// to the cut member with the lowest grade in `query`.
double mass_lower(const FuzzySet& query, const FuzzySet& focal, double mass);
/// As mass_lower, with the highest grade.
double mass_upper(const FuzzySet& query, const FuzzySet& focal, double mass);

double bel(const Bpa& bpa, const FuzzySet& query);
double pls(const Bpa& bpa, const FuzzySet& query);
BeliefInterval interval(const Bpa& bpa, const FuzzySet& query);

// Subset and intersection sums over crisp focals. Kept as an independent path
// for cross-checking bel/pls; throws NotCrisp on fuzzy input.
double bel_crisp(const Bpa& bpa, const FuzzySet& query);
double pls_crisp(const Bpa& bpa, const FuzzySet& query);

/// Upper bound on the mass an element can receive: sum over focals of
/// m(A) * mu_A(t).
double singleton_pls(const Bpa& bpa, const std::string& element);

}  // namespace fuzzyds
