#include "fuzzyds/belief.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "fuzzyds/error.hpp"
#include "fuzzyds/tolerance.hpp"

namespace fuzzyds {

BeliefInterval::BeliefInterval(double bel_value, double pls_value) : bel(bel_value), pls(pls_value) {
  const double eps = epsilon();
  if (!(bel >= -eps && bel <= pls + eps && pls <= 1.0 + eps)) {
    std::ostringstream msg;
    msg << "invalid belief interval [" << bel << ", " << pls << "]";
    throw Error(ErrorKind::DomainError, msg.str());
  }
}

namespace {

enum class Bound { Lower, Upper };

double level_extreme(const FuzzySet& query, const FuzzySet& cut, Bound bound) {
  double best = bound == Bound::Lower ? std::numeric_limits<double>::infinity()
                                      : -std::numeric_limits<double>::infinity();
  bool any = false;
  for (std::size_t i = 0; i < cut.size(); ++i) {
    if (cut.grade(i) < 0.5) continue;
    any = true;
    best = bound == Bound::Lower ? std::min(best, query.grade(i)) : std::max(best, query.grade(i));
  }
  if (!any) throw Error(ErrorKind::EmptySet, "empty alpha-cut");
  return best;
}

double contribution(const FuzzySet& query, const FuzzySet& focal, double mass, Bound bound) {
  require_same_frame(query.frame(), focal.frame());
  double sum = 0.0;
  for (const Level& level : decompose(focal)) {
    sum += level.fraction * level_extreme(query, level.cut, bound);
  }
  return mass * sum;
}

double total(const Bpa& bpa, const FuzzySet& query, Bound bound) {
  require_same_frame(bpa.frame(), query.frame());
  double sum = 0.0;
  for (const Focal& f : bpa.focals()) sum += contribution(query, f.set, f.mass, bound);
  return sum;
}

void require_crisp(const Bpa& bpa, const FuzzySet& query) {
  if (!query.is_crisp() || !bpa.is_crisp()) {
    throw Error(ErrorKind::NotCrisp, "crisp belief needs a crisp bpa and a crisp query");
  }
}

}  // namespace

double mass_lower(const FuzzySet& query, const FuzzySet& focal, double mass) {
  return contribution(query, focal, mass, Bound::Lower);
}

double mass_upper(const FuzzySet& query, const FuzzySet& focal, double mass) {
  return contribution(query, focal, mass, Bound::Upper);
}

double bel(const Bpa& bpa, const FuzzySet& query) { return total(bpa, query, Bound::Lower); }

double pls(const Bpa& bpa, const FuzzySet& query) { return total(bpa, query, Bound::Upper); }

BeliefInterval interval(const Bpa& bpa, const FuzzySet& query) {
  return BeliefInterval(bel(bpa, query), pls(bpa, query));
}

double bel_crisp(const Bpa& bpa, const FuzzySet& query) {
  require_same_frame(bpa.frame(), query.frame());
  require_crisp(bpa, query);
  double sum = 0.0;
  for (const Focal& f : bpa.focals()) {
    if (f.set.is_subset_of(query)) sum += f.mass;
  }
  return sum;
}

double pls_crisp(const Bpa& bpa, const FuzzySet& query) {
  require_same_frame(bpa.frame(), query.frame());
  require_crisp(bpa, query);
  double sum = 0.0;
  for (const Focal& f : bpa.focals()) {
    bool meets = false;
    for (std::size_t i = 0; i < query.size() && !meets; ++i) {
      meets = f.set.grade(i) > 0.5 && query.grade(i) > 0.5;
    }
    if (meets) sum += f.mass;
  }
  return sum;
}

double singleton_pls(const Bpa& bpa, const std::string& element) {
  const std::size_t index = bpa.frame().index_of(element);
  double sum = 0.0;
  for (const Focal& f : bpa.focals()) sum += f.mass * f.set.grade(index);
  return sum;
}

}  // namespace fuzzyds
