#include "fuzzyds/combine.hpp"

#include <sstream>

#include "fuzzyds/error.hpp"
#include "fuzzyds/legacy.hpp"
#include "fuzzyds/tolerance.hpp"

namespace fuzzyds {

NormalizedFocal normalize_subnormal(const FuzzySet& set, double mass) {
  const double peak = set.peak();
  if (peak <= epsilon()) {
    throw Error(ErrorKind::EmptyIntersection, "set has zero peak; its mass is pure conflict");
  }
  if (set.is_normal()) return NormalizedFocal{set, mass, 0.0};
  return NormalizedFocal{scale_to_normal(set), mass * peak, mass * (1.0 - peak)};
}

namespace {

void require_normal_focals(const Bpa& bpa) {
  if (!bpa.all_normal()) {
    throw Error(ErrorKind::SubnormalFocal, "combination requires normal focal elements");
  }
}

}  // namespace

CombinationReport combine(const Bpa& first, const Bpa& second) {
  require_same_frame(first.frame(), second.frame());
  require_normal_focals(first);
  require_normal_focals(second);

  std::vector<Focal> merged;
  std::vector<PairRecord> log;
  double conflict = 0.0;
  for (std::size_t i = 0; i < first.size(); ++i) {
    const Focal& a = first.focals()[i];
    for (std::size_t j = 0; j < second.size(); ++j) {
      const Focal& b = second.focals()[j];
      const double product = a.mass * b.mass;
      FuzzySet meet = intersect_min(a.set, b.set);
      const double peak = meet.peak();
      if (peak <= epsilon()) {
        conflict += product;
        log.push_back(PairRecord{i, j, peak, 0.0});
        continue;
      }
      NormalizedFocal normalized = normalize_subnormal(meet, product);
      conflict += normalized.discarded;
      log.push_back(PairRecord{i, j, peak, normalized.retained});
      merge_focal(merged, Focal{std::move(normalized.set), normalized.retained});
    }
  }

  const double denominator = 1.0 - conflict;
  if (denominator <= epsilon()) {
    std::ostringstream msg;
    msg << "total conflict (conflict mass " << conflict << ")";
    throw Error(ErrorKind::TotalConflict, msg.str());
  }
  for (Focal& f : merged) f.mass /= denominator;
  return CombinationReport{Bpa(first.frame(), std::move(merged)), conflict, std::move(log)};
}

bool ishizuka_equivalence_check(const Bpa& first, const Bpa& second) {
  const CombinationReport ours = combine(first, second);
  const legacy::IshizukaReport theirs = legacy::ishizuka_combine_detailed(first, second);

  if (!approx_equal(ours.conflict_mass, theirs.conflict_mass)) return false;

  for (const PairRecord& pair : ours.pair_log) {
    const double m1 = first.focals()[pair.left].mass;
    const double m2 = second.focals()[pair.right].mass;
    const double degree = legacy::intersection_degree(first.focals()[pair.left].set,
                                                      second.focals()[pair.right].set);
    const double legacy_mass = degree * m1 * m2;
    const double ours_mass = pair.peak <= epsilon() ? 0.0 : pair.retained;
    if (!approx_equal(legacy_mass, ours_mass)) return false;
  }

  std::vector<Focal> normalized;
  for (const Focal& f : theirs.result.focals()) {
    merge_focal(normalized, Focal{scale_to_normal(f.set), f.mass});
  }
  return ours.result.approx_equal(Bpa(first.frame(), std::move(normalized)));
}

}  // namespace fuzzyds
