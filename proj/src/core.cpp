#include "fuzzyds/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "fuzzyds/error.hpp"
#include "fuzzyds/tolerance.hpp"

namespace fuzzyds {

Frame::Frame(std::vector<std::string> labels) {
  if (labels.empty()) {
    throw Error(ErrorKind::InvalidInput, "frame must be nonempty");
  }
  auto index = std::make_shared<std::map<std::string, std::size_t>>();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index->emplace(labels[i], i).second) {
      throw Error(ErrorKind::InvalidInput, "duplicate frame label '" + labels[i] + "'");
    }
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
  index_ = std::move(index);
}

std::optional<std::size_t> Frame::find(const std::string& label) const {
  auto it = index_->find(label);
  if (it == index_->end()) return std::nullopt;
  return it->second;
}

std::size_t Frame::index_of(const std::string& label) const {
  auto found = find(label);
  if (!found) {
    throw Error(ErrorKind::UnknownElement, "label '" + label + "' is not in the frame");
  }
  return *found;
}

bool operator==(const Frame& a, const Frame& b) {
  return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
}

void require_same_frame(const Frame& a, const Frame& b) {
  if (!(a == b)) {
    throw Error(ErrorKind::FrameMismatch, "operands are defined over different frames");
  }
}

FuzzySet::FuzzySet(Frame frame, std::vector<double> grades)
    : frame_(std::move(frame)), grades_(std::move(grades)) {
  if (grades_.size() != frame_.size()) {
    throw Error(ErrorKind::InvalidInput, "membership vector length does not match the frame size");
  }
  const double eps = epsilon();
  for (std::size_t i = 0; i < grades_.size(); ++i) {
    double& g = grades_[i];
    if (!std::isfinite(g) || g < -eps || g > 1.0 + eps) {
      std::ostringstream msg;
      msg << "grade of '" << frame_.label(i) << "' is " << g << ", outside [0, 1]";
      throw Error(ErrorKind::InvalidInput, msg.str());
    }
    g = std::clamp(g, 0.0, 1.0);
  }
}

FuzzySet FuzzySet::empty(const Frame& frame) {
  return FuzzySet(frame, std::vector<double>(frame.size(), 0.0));
}

FuzzySet FuzzySet::whole(const Frame& frame) {
  return FuzzySet(frame, std::vector<double>(frame.size(), 1.0));
}

FuzzySet FuzzySet::crisp(const Frame& frame, const std::vector<std::string>& members) {
  std::vector<double> grades(frame.size(), 0.0);
  for (const auto& label : members) grades[frame.index_of(label)] = 1.0;
  return FuzzySet(frame, std::move(grades));
}

FuzzySet FuzzySet::from_grades(const Frame& frame, const std::map<std::string, double>& grades) {
  std::vector<double> dense(frame.size(), 0.0);
  for (const auto& [label, g] : grades) dense[frame.index_of(label)] = g;
  return FuzzySet(frame, std::move(dense));
}

double FuzzySet::grade(const std::string& label) const {
  return grades_[frame_.index_of(label)];
}

double FuzzySet::peak() const noexcept {
  return *std::max_element(grades_.begin(), grades_.end());
}

bool FuzzySet::is_crisp() const noexcept {
  const double eps = epsilon();
  return std::all_of(grades_.begin(), grades_.end(),
                     [eps](double g) { return g <= eps || g >= 1.0 - eps; });
}

bool FuzzySet::is_normal() const noexcept { return peak() >= 1.0 - epsilon(); }

bool FuzzySet::is_empty() const noexcept { return peak() <= epsilon(); }

std::vector<std::string> FuzzySet::support() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < grades_.size(); ++i) {
    if (grades_[i] > epsilon()) out.push_back(frame_.label(i));
  }
  return out;
}

std::size_t FuzzySet::support_size() const noexcept {
  const double eps = epsilon();
  return static_cast<std::size_t>(
      std::count_if(grades_.begin(), grades_.end(), [eps](double g) { return g > eps; }));
}

bool FuzzySet::is_subset_of(const FuzzySet& other) const {
  require_same_frame(frame_, other.frame_);
  for (std::size_t i = 0; i < grades_.size(); ++i) {
    if (grades_[i] > other.grades_[i] + epsilon()) return false;
  }
  return true;
}

bool FuzzySet::approx_equal(const FuzzySet& other) const {
  require_same_frame(frame_, other.frame_);
  for (std::size_t i = 0; i < grades_.size(); ++i) {
    if (!fuzzyds::approx_equal(grades_[i], other.grades_[i])) return false;
  }
  return true;
}

Decomposition::Decomposition(std::vector<Level> levels) : levels_(std::move(levels)) {
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    if (!(level.alpha > 0.0 && level.alpha <= 1.0)) {
      throw Error(ErrorKind::InvalidInput, "decomposition alpha outside (0, 1]");
    }
    if (!level.cut.is_crisp() || level.cut.is_empty()) {
      throw Error(ErrorKind::InvalidInput, "decomposition cuts must be nonempty crisp sets");
    }
    if (i > 0) {
      const Level& prev = levels_[i - 1];
      if (!(level.alpha > prev.alpha)) {
        throw Error(ErrorKind::InvalidInput, "decomposition alphas must increase strictly");
      }
      if (!level.cut.is_subset_of(prev.cut) ||
          level.cut.support_size() >= prev.cut.support_size()) {
        throw Error(ErrorKind::InvalidInput, "decomposition cuts must be strictly nested");
      }
    }
  }
}

double Decomposition::total_fraction() const noexcept {
  return std::accumulate(levels_.begin(), levels_.end(), 0.0,
                         [](double acc, const Level& l) { return acc + l.fraction; });
}

FuzzySet Decomposition::recompose() const {
  if (levels_.empty()) {
    throw Error(ErrorKind::EmptySet, "cannot recompose an empty decomposition");
  }
  const Frame& frame = levels_.front().cut.frame();
  std::vector<double> grades(frame.size(), 0.0);
  for (const Level& level : levels_) {
    for (std::size_t i = 0; i < grades.size(); ++i) {
      if (level.cut.grade(i) > 0.5) grades[i] = std::max(grades[i], level.alpha);
    }
  }
  return FuzzySet(frame, std::move(grades));
}

FuzzySet alpha_cut(const FuzzySet& set, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    std::ostringstream msg;
    msg << "alpha " << alpha << " outside (0, 1]";
    throw Error(ErrorKind::DomainError, msg.str());
  }
  const double threshold = alpha - epsilon();
  std::vector<double> grades(set.size(), 0.0);
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set.grade(i) >= threshold) grades[i] = 1.0;
  }
  return FuzzySet(set.frame(), std::move(grades));
}

Decomposition decompose(const FuzzySet& set) {
  const double eps = epsilon();
  if (set.is_empty()) {
    throw Error(ErrorKind::EmptySet, "cannot decompose the empty set");
  }
  if (!set.is_normal()) {
    std::ostringstream msg;
    msg << "focal is subnormal (peak " << set.peak() << "); normalize it first";
    throw Error(ErrorKind::SubnormalFocal, msg.str());
  }

  std::vector<double> values;
  for (double g : set.grades()) {
    if (g > eps) values.push_back(g);
  }
  std::sort(values.begin(), values.end());

  // Grades closer than eps form one level; each cluster is represented by its
  // largest member so that the cut at (alpha - eps) still holds the whole
  // cluster.
  std::vector<double> alphas;
  double cluster_start = -1.0;
  for (double v : values) {
    if (alphas.empty() || v > cluster_start + eps) {
      alphas.push_back(v);
      cluster_start = v;
    } else {
      alphas.back() = v;
    }
  }
  alphas.back() = 1.0;

  std::vector<Level> levels;
  levels.reserve(alphas.size());
  double previous = 0.0;
  for (double alpha : alphas) {
    levels.push_back(Level{alpha, alpha_cut(set, alpha), alpha - previous});
    previous = alpha;
  }
  return Decomposition(std::move(levels));
}

FuzzySet compose_from_consonant(std::span<const Focal> focals) {
  if (focals.empty()) {
    throw Error(ErrorKind::BadMass, "consonant family is empty");
  }
  const Frame& frame = focals.front().set.frame();
  double total = 0.0;
  for (const Focal& f : focals) {
    require_same_frame(frame, f.set.frame());
    if (!f.set.is_crisp()) {
      throw Error(ErrorKind::NotCrisp, "consonant focals must be crisp sets");
    }
    if (f.set.is_empty()) {
      throw Error(ErrorKind::EmptySet, "consonant focals must be nonempty");
    }
    if (!(f.mass > 0.0)) {
      throw Error(ErrorKind::BadMass, "consonant focal masses must be positive");
    }
    total += f.mass;
  }
  if (!approx_equal(total, 1.0)) {
    std::ostringstream msg;
    msg << "consonant masses sum to " << total << ", not 1";
    throw Error(ErrorKind::BadMass, msg.str());
  }

  // Outermost first: the outermost set sits at the lowest alpha.
  std::vector<const Focal*> order;
  for (const Focal& f : focals) order.push_back(&f);
  std::sort(order.begin(), order.end(), [](const Focal* a, const Focal* b) {
    return a->set.support_size() > b->set.support_size();
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    const FuzzySet& inner = order[i]->set;
    const FuzzySet& outer = order[i - 1]->set;
    if (inner.support_size() == outer.support_size() || !inner.is_subset_of(outer)) {
      throw Error(ErrorKind::NotConsonant,
                  "focals are not strictly nested (merge equal sets before composing)");
    }
  }

  std::vector<double> grades(frame.size(), 0.0);
  double alpha = 0.0;
  for (const Focal* f : order) {
    alpha += f->mass;
    for (std::size_t i = 0; i < grades.size(); ++i) {
      if (f->set.grade(i) > 0.5) grades[i] = alpha;
    }
  }
  // The innermost set collects the whole mass.
  for (double& g : grades) {
    if (g > 0.0 && approx_equal(g, 1.0)) g = 1.0;
  }
  return FuzzySet(frame, std::move(grades));
}

FuzzySet intersect_min(const FuzzySet& a, const FuzzySet& b) {
  require_same_frame(a.frame(), b.frame());
  std::vector<double> grades(a.size());
  for (std::size_t i = 0; i < grades.size(); ++i) grades[i] = std::min(a.grade(i), b.grade(i));
  return FuzzySet(a.frame(), std::move(grades));
}

FuzzySet complement(const FuzzySet& set) {
  std::vector<double> grades(set.size());
  for (std::size_t i = 0; i < grades.size(); ++i) grades[i] = 1.0 - set.grade(i);
  return FuzzySet(set.frame(), std::move(grades));
}

FuzzySet scale_to_normal(const FuzzySet& set) {
  const double peak = set.peak();
  if (peak <= epsilon()) {
    throw Error(ErrorKind::EmptySet, "cannot normalize a set with zero peak");
  }
  std::vector<double> grades(set.size());
  for (std::size_t i = 0; i < grades.size(); ++i) grades[i] = set.grade(i) / peak;
  return FuzzySet(set.frame(), std::move(grades));
}

}  // namespace fuzzyds
