#include "fuzzyds/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "fuzzyds/error.hpp"

namespace fuzzyds::oracle {

std::vector<CrispPiece> decomposed_pieces(const Bpa& bpa) {
  std::vector<CrispPiece> pieces;
  std::uint64_t product = 1;
  for (const Focal& focal : bpa.focals()) {
    for (const Level& level : decompose(focal.set)) {
      CrispPiece piece{{}, level.fraction * focal.mass};
      for (std::size_t i = 0; i < level.cut.size(); ++i) {
        if (level.cut.grade(i) > 0.5) piece.members.push_back(i);
      }
      product *= piece.members.size();
      if (product > kVertexGuard) {
        throw Error(ErrorKind::TooLarge, "vertex enumeration exceeds the oracle guard");
      }
      pieces.push_back(std::move(piece));
    }
  }
  return pieces;
}

OracleSolution oracle_solve(const Bpa& bpa, const FuzzySet& query) {
  require_same_frame(bpa.frame(), query.frame());
  const std::vector<CrispPiece> pieces = decomposed_pieces(bpa);

  double separable_min = 0.0;
  double separable_max = 0.0;
  for (const CrispPiece& piece : pieces) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t x : piece.members) {
      lo = std::min(lo, query.grade(x));
      hi = std::max(hi, query.grade(x));
    }
    separable_min += piece.mass * lo;
    separable_max += piece.mass * hi;
  }

  // Odometer over the product of cuts: each vertex puts every piece's whole
  // mass on one member of its cut.
  std::vector<std::size_t> choice(pieces.size(), 0);
  double best_min = std::numeric_limits<double>::infinity();
  double best_max = -best_min;
  std::uint64_t vertices = 0;
  while (true) {
    double objective = 0.0;
    for (std::size_t j = 0; j < pieces.size(); ++j) {
      objective += pieces[j].mass * query.grade(pieces[j].members[choice[j]]);
    }
    best_min = std::min(best_min, objective);
    best_max = std::max(best_max, objective);
    ++vertices;

    std::size_t digit = 0;
    while (digit < pieces.size() && ++choice[digit] == pieces[digit].members.size()) {
      choice[digit] = 0;
      ++digit;
    }
    if (digit == pieces.size()) break;
  }

  return OracleSolution{BeliefInterval(best_min, best_max), separable_min, separable_max, vertices};
}

BeliefInterval oracle_bel_pls(const Bpa& bpa, const FuzzySet& query) {
  return oracle_solve(bpa, query).interval;
}

std::vector<double> sample_feasible(const Bpa& bpa, const FuzzySet& query, std::size_t count,
                                    std::uint64_t seed) {
  require_same_frame(bpa.frame(), query.frame());
  const std::vector<CrispPiece> pieces = decomposed_pieces(bpa);

  std::mt19937_64 engine(seed);
  std::exponential_distribution<double> spacing(1.0);
  std::vector<double> out;
  out.reserve(count);
  std::vector<double> weights;
  for (std::size_t n = 0; n < count; ++n) {
    double objective = 0.0;
    for (const CrispPiece& piece : pieces) {
      weights.resize(piece.members.size());
      double total = 0.0;
      for (double& w : weights) {
        w = spacing(engine);
        total += w;
      }
      if (!(total > 0.0)) {
        std::fill(weights.begin(), weights.end(), 1.0);
        total = static_cast<double>(weights.size());
      }
      double share = 0.0;
      for (std::size_t k = 0; k < weights.size(); ++k) {
        share += (weights[k] / total) * query.grade(piece.members[k]);
      }
      objective += piece.mass * share;
    }
    out.push_back(objective);
  }
  return out;
}

}  // namespace fuzzyds::oracle
