#include "fuzzyds/bpa.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fuzzyds/error.hpp"
#include "fuzzyds/tolerance.hpp"

namespace fuzzyds {

CompatibilityRelation::CompatibilityRelation(Frame source, Frame target,
                                             std::vector<double> possibilities)
    : source_(std::move(source)), target_(std::move(target)),
      possibilities_(std::move(possibilities)) {
  if (possibilities_.size() != source_.size() * target_.size()) {
    throw Error(ErrorKind::InvalidInput, "relation matrix does not match the frame sizes");
  }
  const double eps = epsilon();
  for (double& p : possibilities_) {
    if (!std::isfinite(p) || p < -eps || p > 1.0 + eps) {
      throw Error(ErrorKind::InvalidInput, "relation entries must lie in [0, 1]");
    }
    p = std::clamp(p, 0.0, 1.0);
  }
}

double CompatibilityRelation::possibility(std::size_t s, std::size_t t) const {
  if (s >= source_.size() || t >= target_.size()) {
    throw Error(ErrorKind::UnknownElement, "relation index out of range");
  }
  return possibilities_[s * target_.size() + t];
}

bool CompatibilityRelation::is_classic() const noexcept {
  const double eps = epsilon();
  return std::all_of(possibilities_.begin(), possibilities_.end(),
                     [eps](double p) { return p <= eps || p >= 1.0 - eps; });
}

SourceDistribution::SourceDistribution(Frame frame, std::vector<double> probabilities)
    : frame_(std::move(frame)), probabilities_(std::move(probabilities)) {
  if (probabilities_.size() != frame_.size()) {
    throw Error(ErrorKind::InvalidInput, "distribution length does not match the frame size");
  }
  double total = 0.0;
  for (double p : probabilities_) {
    if (!std::isfinite(p) || p < 0.0) {
      throw Error(ErrorKind::BadMass, "probabilities must be nonnegative");
    }
    total += p;
  }
  if (!approx_equal(total, 1.0)) {
    std::ostringstream msg;
    msg << "probabilities sum to " << total << ", not 1";
    throw Error(ErrorKind::BadMass, msg.str());
  }
}

void merge_focal(std::vector<Focal>& focals, Focal focal) {
  for (Focal& existing : focals) {
    if (existing.set.approx_equal(focal.set)) {
      existing.mass += focal.mass;
      return;
    }
  }
  focals.push_back(std::move(focal));
}

Bpa::Bpa(Frame frame, std::vector<Focal> focals) : Bpa(std::move(frame), std::move(focals), true) {}

Bpa Bpa::with_subnormal_focals(Frame frame, std::vector<Focal> focals) {
  return Bpa(std::move(frame), std::move(focals), false);
}

Bpa::Bpa(Frame frame, std::vector<Focal> focals, bool require_normal) : frame_(std::move(frame)) {
  if (focals.empty()) {
    throw Error(ErrorKind::BadMass, "a bpa needs at least one focal element");
  }
  double total = 0.0;
  for (Focal& focal : focals) {
    require_same_frame(frame_, focal.set.frame());
    if (!std::isfinite(focal.mass) || !(focal.mass > 0.0)) {
      throw Error(ErrorKind::BadMass, "focal masses must be strictly positive");
    }
    if (focal.set.is_empty()) {
      throw Error(ErrorKind::EmptySet, "a focal element cannot be empty");
    }
    if (require_normal && !focal.set.is_normal()) {
      std::ostringstream msg;
      msg << "focal element is subnormal (peak " << focal.set.peak() << ")";
      throw Error(ErrorKind::SubnormalFocal, msg.str());
    }
    total += focal.mass;
    merge_focal(focals_, std::move(focal));
  }
  if (!fuzzyds::approx_equal(total, 1.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "focal masses sum to " << total << ", not 1";
    throw Error(ErrorKind::BadMass, msg.str());
  }
}

Bpa Bpa::vacuous(const Frame& frame) {
  return Bpa(frame, {Focal{FuzzySet::whole(frame), 1.0}});
}

bool Bpa::is_crisp() const noexcept {
  return std::all_of(focals_.begin(), focals_.end(),
                     [](const Focal& f) { return f.set.is_crisp(); });
}

bool Bpa::all_normal() const noexcept {
  return std::all_of(focals_.begin(), focals_.end(),
                     [](const Focal& f) { return f.set.is_normal(); });
}

bool Bpa::approx_equal(const Bpa& other) const {
  if (!(frame_ == other.frame_) || focals_.size() != other.focals_.size()) return false;
  // Focals within one bpa are pairwise distinct, so a greedy match suffices.
  std::vector<bool> used(other.focals_.size(), false);
  for (const Focal& f : focals_) {
    bool matched = false;
    for (std::size_t j = 0; j < other.focals_.size(); ++j) {
      if (used[j]) continue;
      const Focal& g = other.focals_[j];
      if (f.set.approx_equal(g.set)) {
        if (!fuzzyds::approx_equal(f.mass, g.mass)) return false;
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

FuzzySet granule(const CompatibilityRelation& relation, std::size_t source_index) {
  const std::size_t n_source = relation.source().size();
  if (source_index >= n_source) {
    throw Error(ErrorKind::UnknownElement, "source index out of range");
  }
  // mu(t) = max_s' min(1{s' = s}, C(s', t)); only the row of s survives.
  std::vector<double> grades(relation.target().size(), 0.0);
  for (std::size_t s = 0; s < n_source; ++s) {
    const double indicator = (s == source_index) ? 1.0 : 0.0;
    for (std::size_t t = 0; t < grades.size(); ++t) {
      grades[t] = std::max(grades[t], std::min(indicator, relation.possibility(s, t)));
    }
  }
  return FuzzySet(relation.target(), std::move(grades));
}

FuzzySet granule(const CompatibilityRelation& relation, const std::string& source_label) {
  return granule(relation, relation.source().index_of(source_label));
}

Bpa induce_bpa(const SourceDistribution& distribution, const CompatibilityRelation& relation) {
  require_same_frame(distribution.frame(), relation.source());
  std::vector<Focal> groups;
  double empty_mass = 0.0;
  for (std::size_t s = 0; s < relation.source().size(); ++s) {
    const double p = distribution.probability(s);
    // Sources of probability zero induce nothing, whatever their granule.
    if (p <= 0.0) continue;
    FuzzySet g = granule(relation, s);
    if (g.is_empty()) {
      empty_mass += p;
      continue;
    }
    if (!g.is_normal()) {
      std::ostringstream msg;
      msg << "granule of '" << relation.source().label(s) << "' is subnormal (peak " << g.peak()
          << ")";
      throw Error(ErrorKind::SubnormalGranule, msg.str());
    }
    merge_focal(groups, Focal{std::move(g), p});
  }
  const double denominator = 1.0 - empty_mass;
  if (groups.empty() || denominator <= epsilon()) {
    throw Error(ErrorKind::TotalIncompatibility,
                "all probability mass falls on sources with empty granules");
  }
  for (Focal& f : groups) f.mass /= denominator;
  return Bpa(relation.target(), std::move(groups));
}

CompatibilityRelation combine_relations(const CompatibilityRelation& first,
                                        const CompatibilityRelation& second) {
  require_same_frame(first.target(), second.target());
  const std::size_t n_first = first.source().size();
  const std::size_t n_second = second.source().size();
  const std::size_t n_target = first.target().size();

  std::vector<std::string> labels;
  labels.reserve(n_first * n_second);
  for (const auto& r : first.source().labels()) {
    for (const auto& s : second.source().labels()) {
      labels.push_back(r + std::string(kProductSeparator) + s);
    }
  }
  Frame product = [&] {
    try {
      return Frame(std::move(labels));
    } catch (const Error&) {
      throw Error(ErrorKind::LabelCollision,
                  "product labels collide; source labels must not be ambiguous around '⊗'");
    }
  }();

  std::vector<double> entries;
  entries.reserve(n_first * n_second * n_target);
  for (std::size_t r = 0; r < n_first; ++r) {
    for (std::size_t s = 0; s < n_second; ++s) {
      for (std::size_t t = 0; t < n_target; ++t) {
        entries.push_back(std::min(first.possibility(r, t), second.possibility(s, t)));
      }
    }
  }
  return CompatibilityRelation(std::move(product), first.target(), std::move(entries));
}

}  // namespace fuzzyds
