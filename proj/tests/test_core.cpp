#include <doctest.h>

#include "fuzzyds/core.hpp"
#include "fuzzyds/error.hpp"
#include "support/expect_error.hpp"
#include "support/fixtures.hpp"

using namespace fuzzyds;
using namespace fuzzyds::testing;

namespace {

std::vector<std::string> members(const FuzzySet& s) { return s.support(); }

using Labels = std::vector<std::string>;

template <typename Fn>
ErrorKind kind_of(Fn&& fn) {
  return error_kind(std::forward<Fn>(fn));
}

}  // namespace

TEST_CASE("frame rejects empty and duplicate labels") {
  CHECK(kind_of([] { Frame(Labels{}); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { Frame(Labels{"a", "b", "a"}); }) == ErrorKind::InvalidInput);
  const Frame f(Labels{"x", "y"});
  CHECK(f.index_of("y") == 1);
  CHECK(kind_of([&] { f.index_of("z"); }) == ErrorKind::UnknownElement);
  CHECK(f == Frame(Labels{"x", "y"}));
  CHECK_FALSE(f == Frame(Labels{"y", "x"}));
}

TEST_CASE("fuzzy set validates grades and reports predicates") {
  const Frame f = letters(3);
  CHECK(kind_of([&] { FuzzySet(f, {0.2, 1.2, 0.0}); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([&] { FuzzySet(f, {0.2, -0.1, 0.0}); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([&] { FuzzySet(f, {0.2, 0.1}); }) == ErrorKind::InvalidInput);

  const FuzzySet s(f, {0.3, 1.0, 0.0});
  CHECK(s.is_normal());
  CHECK_FALSE(s.is_crisp());
  CHECK(s.peak() == 1.0);
  CHECK(members(s) == Labels{"a", "b"});
  CHECK(FuzzySet::crisp(f, {"a", "c"}).is_crisp());
  CHECK(FuzzySet::empty(f).is_empty());
  CHECK_FALSE(FuzzySet(f, {0.5, 0.2, 0.0}).is_normal());
}

TEST_CASE("alpha_cut") {
  const Frame f = ten_frame();
  CHECK(members(alpha_cut(example_a(f), 0.75)) == Labels{"3", "4", "5", "6"});
  CHECK(members(alpha_cut(example_c(f), 0.8)) == Labels{"6", "7"});

  const FuzzySet crisp = FuzzySet::crisp(f, {"2", "9"});
  CHECK(alpha_cut(crisp, 1.0).approx_equal(crisp));

  CHECK(kind_of([&] { alpha_cut(crisp, 0.0); }) == ErrorKind::DomainError);
  CHECK(kind_of([&] { alpha_cut(crisp, 1.5); }) == ErrorKind::DomainError);
}

TEST_CASE("alpha_cut is antitone in alpha") {
  Rng rng(11);
  const Frame f = letters(6);
  for (int trial = 0; trial < 200; ++trial) {
    const FuzzySet s = random_set(f, rng);
    const double lo = grid_grade(rng, 0.05);
    const double hi = grid_grade(rng, 0.05);
    const double a = std::min(lo, hi);
    const double b = std::max(lo, hi);
    CHECK(alpha_cut(s, b).is_subset_of(alpha_cut(s, a)));
  }
}

TEST_CASE("decompose the worked-example focals") {
  const Frame f = ten_frame();

  const Decomposition c = decompose(example_c(f));
  REQUIRE(c.size() == 4);
  const double alphas[] = {0.4, 0.5, 0.8, 1.0};
  const double fractions[] = {0.4, 0.1, 0.3, 0.2};
  const Labels cuts[] = {{"5", "6", "7", "8"}, {"5", "6", "7"}, {"6", "7"}, {"6"}};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(c.levels()[i].alpha == alphas[i]);
    CHECK(c.levels()[i].fraction == doctest::Approx(fractions[i]).epsilon(1e-12));
    CHECK(members(c.levels()[i].cut) == cuts[i]);
  }

  const Decomposition a = decompose(example_a(f));
  REQUIRE(a.size() == 4);
  const Labels a_cuts[] = {{"1", "2", "3", "4", "5", "6", "7", "8"},
                           {"2", "3", "4", "5", "6", "7"},
                           {"3", "4", "5", "6"},
                           {"4", "5"}};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(a.levels()[i].alpha == 0.25 * static_cast<double>(i + 1));
    CHECK(a.levels()[i].fraction == 0.25);
    CHECK(members(a.levels()[i].cut) == a_cuts[i]);
  }
}

TEST_CASE("decompose a crisp set yields the set itself") {
  const Frame f = ten_frame();
  const FuzzySet crisp = FuzzySet::crisp(f, {"4", "5"});
  const Decomposition d = decompose(crisp);
  REQUIRE(d.size() == 1);
  CHECK(d.levels()[0].alpha == 1.0);
  CHECK(d.levels()[0].fraction == 1.0);
  CHECK(d.levels()[0].cut.approx_equal(crisp));
}

TEST_CASE("decompose rejects subnormal and empty sets") {
  const Frame f = letters(3);
  CHECK(kind_of([&] { decompose(FuzzySet(f, {0.5, 0.2, 0.0})); }) == ErrorKind::SubnormalFocal);
  CHECK(kind_of([&] { decompose(FuzzySet::empty(f)); }) == ErrorKind::EmptySet);
}

TEST_CASE("decompose properties on random normal sets") {
  Rng rng(2024);
  const Frame f = letters(8);
  for (int trial = 0; trial < 300; ++trial) {
    const FuzzySet s = random_normal_set(f, rng);
    const Decomposition d = decompose(s);
    CHECK(d.total_fraction() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(d.levels().back().alpha == 1.0);
    // Union of cuts is the outermost cut, which is the support.
    CHECK(members(d.levels().front().cut) == s.support());
    CHECK(d.recompose().approx_equal(s));

    std::vector<Focal> family;
    for (const Level& level : d) family.push_back(Focal{level.cut, level.fraction});
    CHECK(compose_from_consonant(family).approx_equal(s));
  }
}

TEST_CASE("compose_from_consonant") {
  const Frame f = ten_frame();
  const std::vector<Focal> nested{
      {FuzzySet::crisp(f, {"6"}), 0.2},
      {FuzzySet::crisp(f, {"6", "7"}), 0.3},
      {FuzzySet::crisp(f, {"5", "6", "7"}), 0.1},
      {FuzzySet::crisp(f, {"5", "6", "7", "8"}), 0.4},
  };
  CHECK(compose_from_consonant(nested).approx_equal(example_c(f)));

  const Frame ab = letters(2);
  const std::vector<Focal> single{{FuzzySet::crisp(ab, {"a"}), 1.0}};
  CHECK(compose_from_consonant(single).approx_equal(FuzzySet::crisp(ab, {"a"})));

  const std::vector<Focal> two{{FuzzySet::crisp(ab, {"a"}), 0.5},
                               {FuzzySet::crisp(ab, {"a", "b"}), 0.5}};
  CHECK(compose_from_consonant(two).approx_equal(FuzzySet(ab, {1.0, 0.5})));

  const Frame abc = letters(3);
  const std::vector<Focal> crossing{{FuzzySet::crisp(abc, {"a", "b"}), 0.5},
                                    {FuzzySet::crisp(abc, {"b", "c"}), 0.5}};
  CHECK(kind_of([&] { compose_from_consonant(crossing); }) == ErrorKind::NotConsonant);
  const std::vector<Focal> repeated{{FuzzySet::crisp(abc, {"a"}), 0.5},
                                    {FuzzySet::crisp(abc, {"a"}), 0.5}};
  CHECK(kind_of([&] { compose_from_consonant(repeated); }) == ErrorKind::NotConsonant);
  const std::vector<Focal> short_mass{{FuzzySet::crisp(abc, {"a"}), 0.5},
                                      {FuzzySet::crisp(abc, {"a", "b"}), 0.4}};
  CHECK(kind_of([&] { compose_from_consonant(short_mass); }) == ErrorKind::BadMass);
}

TEST_CASE("intersect_min and complement") {
  const Frame f = ten_frame();
  const FuzzySet ac = intersect_min(example_a(f), example_c(f));
  CHECK(ac.approx_equal(FuzzySet::from_grades(f, {{"5", 0.5}, {"6", 0.75}, {"7", 0.5}, {"8", 0.25}})));
  CHECK(intersect_min(example_a(f), example_a(f)).approx_equal(example_a(f)));
  CHECK(intersect_min(example_a(f), FuzzySet::empty(f)).is_empty());

  const Frame ab = letters(2);
  CHECK(complement(FuzzySet::crisp(ab, {"a"})).approx_equal(FuzzySet::crisp(ab, {"b"})));
  CHECK(complement(FuzzySet(ab, {0.3, 0.0})).approx_equal(FuzzySet(ab, {0.7, 1.0})));

  CHECK(kind_of([&] { intersect_min(example_a(f), FuzzySet::whole(ab)); }) == ErrorKind::FrameMismatch);
}

TEST_CASE("set algebra laws on random sets") {
  Rng rng(7);
  const Frame f = letters(6);
  for (int trial = 0; trial < 200; ++trial) {
    const FuzzySet a = random_set(f, rng);
    const FuzzySet b = random_set(f, rng);
    const FuzzySet c = random_set(f, rng);
    CHECK(intersect_min(a, b).approx_equal(intersect_min(b, a)));
    CHECK(intersect_min(intersect_min(a, b), c).approx_equal(intersect_min(a, intersect_min(b, c))));
    CHECK(intersect_min(a, a).approx_equal(a));
    CHECK(complement(complement(a)).approx_equal(a));
  }
}
