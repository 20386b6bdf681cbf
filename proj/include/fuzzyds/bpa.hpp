#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fuzzyds/core.hpp"

namespace fuzzyds {

// Separator used to label elements of a product source space R x S.
inline constexpr std::string_view kProductSeparator = "⊗";

// Joint possibility distribution over source x target. Row s is the granule
// of s.
class CompatibilityRelation {
 public:
  CompatibilityRelation(Frame source, Frame target, std::vector<double> possibilities);

  const Frame& source() const noexcept { return source_; }
  const Frame& target() const noexcept { return target_; }
  double possibility(std::size_t s, std::size_t t) const;
  /// True when every entry is 0 or 1 (an ordinary multivalued mapping).
  bool is_classic() const noexcept;

 private:
  Frame source_;
  Frame target_;
  std::vector<double> possibilities_;  // row-major, |source| x |target|
};

class SourceDistribution {
 public:
  SourceDistribution(Frame frame, std::vector<double> probabilities);

  const Frame& frame() const noexcept { return frame_; }
  std::span<const double> probabilities() const noexcept { return probabilities_; }
  double probability(std::size_t index) const { return probabilities_.at(index); }

 private:
  Frame frame_;
  std::vector<double> probabilities_;
};

// Basic probability assignment over a frame. Masses are positive and sum to
// 1; focals that are equal within epsilon are merged by adding their masses.
// Focal order is the order of first appearance.
class Bpa {
 public:
  /// Requires every focal to be normal.
  Bpa(Frame frame, std::vector<Focal> focals);

  /// Same checks except normality; for the legacy rule, whose output keeps
  /// raw (possibly subnormal) intersections.
  static Bpa with_subnormal_focals(Frame frame, std::vector<Focal> focals);

  /// Single focal: the whole frame with mass 1.
  static Bpa vacuous(const Frame& frame);

  const Frame& frame() const noexcept { return frame_; }
  const std::vector<Focal>& focals() const noexcept { return focals_; }
  std::size_t size() const noexcept { return focals_.size(); }

  bool is_crisp() const noexcept;
  bool all_normal() const noexcept;

  /// Order-independent comparison: same focals (within epsilon) carrying the
  /// same masses (within epsilon).
  bool approx_equal(const Bpa& other) const;

 private:
  Bpa(Frame frame, std::vector<Focal> focals, bool require_normal);

  Frame frame_;
  std::vector<Focal> focals_;
};

/// Appends `focal` to `focals`, adding its mass to an existing equal focal if
/// there is one.
void merge_focal(std::vector<Focal>& focals, Focal focal);

/// Max-min composition of the singleton {s} with the relation.
FuzzySet granule(const CompatibilityRelation& relation, std::size_t source_index);
FuzzySet granule(const CompatibilityRelation& relation, const std::string& source_label);

/// Groups equal granules, sums their source probabilities and discards the
/// mass of sources whose granule is empty.
Bpa induce_bpa(const SourceDistribution& distribution, const CompatibilityRelation& relation);

/// Relation over (R x S) x T whose entry is min(C1(r,t), C2(s,t)), from the
/// noninteractivity of the two sources. Product labels are "r⊗s".
CompatibilityRelation combine_relations(const CompatibilityRelation& first,
                                        const CompatibilityRelation& second);

}  // namespace fuzzyds
