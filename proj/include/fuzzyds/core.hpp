#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fuzzyds {

// Ordered, finite set of hypothesis labels. Copies share the label storage,
// so passing frames around by value is cheap.
class Frame {
 public:
  explicit Frame(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_->size(); }
  const std::string& label(std::size_t index) const { return labels_->at(index); }
  const std::vector<std::string>& labels() const noexcept { return *labels_; }

  std::optional<std::size_t> find(const std::string& label) const;
  /// Throws UnknownElement when the label is not part of the frame.
  std::size_t index_of(const std::string& label) const;

  friend bool operator==(const Frame& a, const Frame& b);

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
  std::shared_ptr<const std::map<std::string, std::size_t>> index_;
};

/// Throws FrameMismatch unless both frames carry the same labels in the same
/// order.
void require_same_frame(const Frame& a, const Frame& b);

// Membership vector over a frame. Dense: every frame element has a grade,
// zero grades included. Immutable after construction.
class FuzzySet {
 public:
  FuzzySet(Frame frame, std::vector<double> grades);

  static FuzzySet empty(const Frame& frame);
  static FuzzySet whole(const Frame& frame);
  /// Crisp set holding exactly the given labels.
  static FuzzySet crisp(const Frame& frame, const std::vector<std::string>& members);
  /// Labels missing from the map get grade 0.
  static FuzzySet from_grades(const Frame& frame, const std::map<std::string, double>& grades);

  const Frame& frame() const noexcept { return frame_; }
  std::size_t size() const noexcept { return grades_.size(); }
  std::span<const double> grades() const noexcept { return grades_; }
  double grade(std::size_t index) const { return grades_.at(index); }
  double grade(const std::string& label) const;

  double peak() const noexcept;
  bool is_crisp() const noexcept;
  bool is_normal() const noexcept;
  bool is_empty() const noexcept;

  /// Labels with a grade above epsilon, in frame order.
  std::vector<std::string> support() const;
  std::size_t support_size() const noexcept;

  /// Pointwise mu_this <= mu_other (within epsilon).
  bool is_subset_of(const FuzzySet& other) const;
  /// Grade-wise equality within epsilon; frames must match.
  bool approx_equal(const FuzzySet& other) const;

 private:
  Frame frame_;
  std::vector<double> grades_;
};

// A (set, mass) pair: a focal element of a bpa or one member of a consonant
// family.
struct Focal {
  FuzzySet set;
  double mass;
};

struct Level {
  double alpha;
  FuzzySet cut;
  double fraction;
};

// Nested alpha-level sets of a normal fuzzy set together with the share of the
// set's mass each level receives.
class Decomposition {
 public:
  explicit Decomposition(std::vector<Level> levels);

  const std::vector<Level>& levels() const noexcept { return levels_; }
  std::size_t size() const noexcept { return levels_.size(); }
  auto begin() const noexcept { return levels_.begin(); }
  auto end() const noexcept { return levels_.end(); }

  /// Sum of fractions; equals the peak of the decomposed set.
  double total_fraction() const noexcept;

  /// Resolution identity: mu(x) = max over levels containing x of alpha.
  FuzzySet recompose() const;

 private:
  std::vector<Level> levels_;
};

/// {x | mu_A(x) >= alpha - eps}, as a crisp set. alpha must lie in (0, 1].
FuzzySet alpha_cut(const FuzzySet& set, double alpha);

// Level sets at every distinct nonzero grade of `set`. The set must be normal
// (SubnormalFocal otherwise) and nonempty (EmptySet).
Decomposition decompose(const FuzzySet& set);

// Builds the fuzzy set whose decomposition is the given nested crisp family.
// Accepts the family in any order; the sets must be strictly nested and the
// masses must be positive and sum to 1.
FuzzySet compose_from_consonant(std::span<const Focal> focals);

FuzzySet intersect_min(const FuzzySet& a, const FuzzySet& b);
FuzzySet complement(const FuzzySet& set);

/// mu(x) / peak. Throws EmptySet for a zero-peak set.
FuzzySet scale_to_normal(const FuzzySet& set);

}  // namespace fuzzyds
