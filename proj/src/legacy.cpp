#include "fuzzyds/legacy.hpp"

#include <algorithm>
#include <sstream>

#include "fuzzyds/error.hpp"
#include "fuzzyds/tolerance.hpp"

namespace fuzzyds::legacy {

std::string_view to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::Ishizuka: return "ishizuka";
    case MeasureKind::Yager: return "yager";
    case MeasureKind::Ogawa: return "ogawa";
  }
  return "unknown";
}

std::optional<MeasureKind> parse_measure_kind(std::string_view name) {
  if (name == "ishizuka") return MeasureKind::Ishizuka;
  if (name == "yager") return MeasureKind::Yager;
  if (name == "ogawa") return MeasureKind::Ogawa;
  return std::nullopt;
}

double expected_possibility(const Bpa& bpa, const FuzzySet& query) {
  require_same_frame(bpa.frame(), query.frame());
  double sum = 0.0;
  for (const Focal& f : bpa.focals()) sum += f.mass * intersect_min(query, f.set).peak();
  return sum;
}

double expected_certainty(const Bpa& bpa, const FuzzySet& query) {
  return 1.0 - expected_possibility(bpa, complement(query));
}

double inclusion(MeasureKind kind, const FuzzySet& a, const FuzzySet& b) {
  require_same_frame(a.frame(), b.frame());
  if (a.is_empty()) throw Error(ErrorKind::EmptySet, "inclusion of an empty set is undefined");

  const std::size_t n = a.size();
  switch (kind) {
    case MeasureKind::Ishizuka: {
      double numerator = 1.0;
      for (std::size_t i = 0; i < n; ++i) {
        numerator = std::min(numerator, std::min(1.0, 1.0 + b.grade(i) - a.grade(i)));
      }
      return std::min(1.0, numerator / a.peak());
    }
    case MeasureKind::Yager: {
      double value = 1.0;
      for (std::size_t i = 0; i < n; ++i) {
        value = std::min(value, std::max(1.0 - a.grade(i), b.grade(i)));
      }
      return value;
    }
    case MeasureKind::Ogawa: {
      double overlap = 0.0;
      double size = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        overlap += std::min(a.grade(i), b.grade(i));
        size += a.grade(i);
      }
      return overlap / size;
    }
  }
  throw Error(ErrorKind::InvalidInput, "unknown inclusion measure");
}

double bel_via_inclusion(MeasureKind kind, const Bpa& bpa, const FuzzySet& query) {
  require_same_frame(bpa.frame(), query.frame());
  double sum = 0.0;
  for (const Focal& f : bpa.focals()) sum += inclusion(kind, f.set, query) * f.mass;
  return sum;
}

double intersection_degree(const FuzzySet& a, const FuzzySet& b) {
  const double scale = std::min(a.peak(), b.peak());
  if (scale <= epsilon()) {
    throw Error(ErrorKind::EmptySet, "degree of intersection needs nonempty sets");
  }
  return intersect_min(a, b).peak() / scale;
}

IshizukaReport ishizuka_combine_detailed(const Bpa& first, const Bpa& second) {
  require_same_frame(first.frame(), second.frame());
  std::vector<Focal> merged;
  double conflict = 0.0;
  for (const Focal& a : first.focals()) {
    for (const Focal& b : second.focals()) {
      const double product = a.mass * b.mass;
      const double degree = intersection_degree(a.set, b.set);
      conflict += (1.0 - degree) * product;
      FuzzySet meet = intersect_min(a.set, b.set);
      if (meet.is_empty()) continue;
      merge_focal(merged, Focal{std::move(meet), degree * product});
    }
  }
  const double denominator = 1.0 - conflict;
  if (denominator <= epsilon() || merged.empty()) {
    std::ostringstream msg;
    msg << "total conflict (conflict mass " << conflict << ")";
    throw Error(ErrorKind::TotalConflict, msg.str());
  }
  for (Focal& f : merged) f.mass /= denominator;
  return IshizukaReport{Bpa::with_subnormal_focals(first.frame(), std::move(merged)), conflict};
}

Bpa ishizuka_combine(const Bpa& first, const Bpa& second) {
  return ishizuka_combine_detailed(first, second).result;
}

}  // namespace fuzzyds::legacy
