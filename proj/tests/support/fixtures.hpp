#pragma once

// Shared test data: the worked example over the frame 1..10, seeded random
// generators, and a bitmask implementation of the classic Dempster rule used
// as an independent reference.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "fuzzyds/bpa.hpp"
#include "fuzzyds/core.hpp"

namespace fuzzyds::testing {

inline Frame ten_frame() {
  std::vector<std::string> labels;
  for (int i = 1; i <= 10; ++i) labels.push_back(std::to_string(i));
  return Frame(std::move(labels));
}

inline FuzzySet example_a(const Frame& f) {
  return FuzzySet::from_grades(f, {{"1", 0.25}, {"2", 0.5}, {"3", 0.75}, {"4", 1.0},
                                   {"5", 1.0}, {"6", 0.75}, {"7", 0.5}, {"8", 0.25}});
}

inline FuzzySet example_c(const Frame& f) {
  return FuzzySet::from_grades(f, {{"5", 0.5}, {"6", 1.0}, {"7", 0.8}, {"8", 0.4}});
}

inline FuzzySet example_b(const Frame& f) {
  return FuzzySet::from_grades(f, {{"2", 0.5}, {"3", 1.0}, {"4", 1.0}, {"5", 1.0},
                                   {"6", 0.9}, {"7", 0.6}, {"8", 0.3}});
}

inline Bpa example_bpa(const Frame& f, double mass_a = 0.5) {
  return Bpa(f, {Focal{example_a(f), mass_a}, Focal{example_c(f), 1.0 - mass_a}});
}

inline Frame letters(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return Frame(std::move(labels));
}

using Rng = std::mt19937_64;

inline std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Grade drawn from {step, 2 step, ..., 1}.
inline double grid_grade(Rng& rng, double step) {
  const auto steps = static_cast<std::size_t>(1.0 / step + 0.5);
  return static_cast<double>(uniform_index(rng, 1, steps)) / static_cast<double>(steps);
}

// Random fuzzy set with grades on the grid; zero grades included. May be
// empty or subnormal.
inline FuzzySet random_set(const Frame& frame, Rng& rng, double step = 0.05) {
  std::vector<double> grades(frame.size(), 0.0);
  const auto steps = static_cast<std::size_t>(1.0 / step + 0.5);
  for (double& g : grades) {
    g = static_cast<double>(uniform_index(rng, 0, steps)) / static_cast<double>(steps);
  }
  return FuzzySet(frame, std::move(grades));
}

// Random normal fuzzy set with a random support.
inline FuzzySet random_normal_set(const Frame& frame, Rng& rng, double step = 0.05) {
  std::vector<double> grades(frame.size(), 0.0);
  const std::size_t support = uniform_index(rng, 1, frame.size());
  std::vector<std::size_t> order(frame.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t k = 0; k < support; ++k) grades[order[k]] = grid_grade(rng, step);
  grades[order[0]] = 1.0;
  return FuzzySet(frame, std::move(grades));
}

inline FuzzySet random_crisp_set(const Frame& frame, Rng& rng) {
  std::vector<double> grades(frame.size(), 0.0);
  for (double& g : grades) g = static_cast<double>(uniform_index(rng, 0, 1));
  return FuzzySet(frame, std::move(grades));
}

inline std::vector<double> random_masses(Rng& rng, std::size_t count) {
  std::vector<double> weights(count);
  double total = 0.0;
  for (double& w : weights) {
    w = static_cast<double>(uniform_index(rng, 1, 20));
    total += w;
  }
  for (double& w : weights) w /= total;
  return weights;
}

inline Bpa random_bpa(const Frame& frame, Rng& rng, std::size_t max_focals, double step = 0.05) {
  const std::size_t count = uniform_index(rng, 1, max_focals);
  const auto masses = random_masses(rng, count);
  std::vector<Focal> focals;
  for (std::size_t k = 0; k < count; ++k) focals.push_back(Focal{random_normal_set(frame, rng, step), masses[k]});
  return Bpa(frame, std::move(focals));
}

// Classic rule on bitmask-encoded crisp sets; masks index frame positions.
using ClassicBpa = std::map<std::uint32_t, double>;

inline std::uint32_t mask_of(const FuzzySet& crisp) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < crisp.size(); ++i) {
    if (crisp.grade(i) > 0.5) mask |= (1u << i);
  }
  return mask;
}

inline FuzzySet set_of(const Frame& frame, std::uint32_t mask) {
  std::vector<double> grades(frame.size(), 0.0);
  for (std::size_t i = 0; i < frame.size(); ++i) grades[i] = (mask >> i) & 1u ? 1.0 : 0.0;
  return FuzzySet(frame, std::move(grades));
}

inline ClassicBpa to_classic(const Bpa& bpa) {
  ClassicBpa out;
  for (const Focal& f : bpa.focals()) out[mask_of(f.set)] += f.mass;
  return out;
}

// Returns false on total conflict.
inline bool classic_dempster(const ClassicBpa& m1, const ClassicBpa& m2, ClassicBpa& out) {
  out.clear();
  double conflict = 0.0;
  for (const auto& [a, ma] : m1) {
    for (const auto& [b, mb] : m2) {
      if ((a & b) == 0) {
        conflict += ma * mb;
      } else {
        out[a & b] += ma * mb;
      }
    }
  }
  if (out.empty()) return false;
  for (auto& [mask, mass] : out) mass /= (1.0 - conflict);
  return true;
}

}  // namespace fuzzyds::testing
