#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "braidorder/braid.hpp"
#include "braidorder/normal_form.hpp"

using namespace braidorder;

namespace {

PositiveBraidWord random_positive(std::mt19937& rng, int strands, int len) {
  std::vector<int> letters;
  for (int i = 0; i < len; ++i) {
    letters.push_back(1 + static_cast<int>(rng() % (strands - 1)));
  }
  return PositiveBraidWord(strands, letters);
}

}  // namespace

TEST_CASE("greedy normal form of simple words") {
  GreedyNormalForm half(PositiveBraidWord(3, {1, 2, 1}));
  REQUIRE(half.factor_count() == 1);
  CHECK(half.factors()[0].is_half_twist());

  GreedyNormalForm square(PositiveBraidWord(3, {2, 2}));
  REQUIRE(square.factor_count() == 2);
  CHECK(square.factors()[0] == Permutation::transposition(3, 2));
  CHECK(square.factors()[1] == Permutation::transposition(3, 2));

  GreedyNormalForm empty(PositiveBraidWord(3, {}));
  CHECK(empty.factor_count() == 0);
  CHECK(empty.to_word().empty());
}

TEST_CASE("normal form identifies equal words") {
  CHECK(GreedyNormalForm(PositiveBraidWord(3, {1, 2, 1})) ==
        GreedyNormalForm(PositiveBraidWord(3, {2, 1, 2})));
  CHECK(equal(PositiveBraidWord(3, {1, 2, 1}), PositiveBraidWord(3, {2, 1, 2})));
  CHECK(!equal(PositiveBraidWord(3, {1, 2}), PositiveBraidWord(3, {2, 1})));
  CHECK(equal(PositiveBraidWord(4, {1, 3}), PositiveBraidWord(4, {3, 1})));
}

TEST_CASE("right divisibility by a generator") {
  // sigma_1 sigma_2 sigma_1 sigma_2 = Delta * sigma_2 = sigma_1^2 sigma_2 sigma_1;
  // both generators right-divide it even though its left-weighted final
  // factor is just sigma_2.
  PositiveBraidWord b(3, {1, 2, 1, 2});
  CHECK(right_divides_gen(b, 1));
  CHECK(right_divides_gen(b, 2));

  PositiveBraidWord c(3, {1, 2});
  CHECK(!right_divides_gen(c, 1));
  CHECK(right_divides_gen(c, 2));

  CHECK(equal(b, PositiveBraidWord(3, {1, 1, 2, 1})));
}

TEST_CASE("incremental right-weighted division") {
  RightWeightedForm form(PositiveBraidWord(3, {1, 2, 1, 2}));
  CHECK(form.divisible_by(1));
  form.divide_by(1);
  CHECK(equal(form.to_word(), PositiveBraidWord(3, {1, 1, 2})));
  CHECK(form.divisible_by(2));
  form.divide_by(2);
  CHECK(equal(form.to_word(), PositiveBraidWord(3, {1, 1})));
  CHECK(form.divisible_by(1));
  CHECK(!form.divisible_by(2));
  form.divide_by(1);
  form.divide_by(1);
  CHECK(form.empty());
}

TEST_CASE("right quotient") {
  PositiveBraidWord b(3, {1, 2, 1, 2});
  auto q = right_quotient(b, PositiveBraidWord(3, {2, 1}));
  REQUIRE(q.has_value());
  CHECK(equal(concat(*q, PositiveBraidWord(3, {2, 1})), b));
  CHECK(!right_quotient(PositiveBraidWord(3, {1, 2}), PositiveBraidWord(3, {1}))
             .has_value());
}

TEST_CASE("divisibility test agrees with quotient existence") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 3 + static_cast<int>(rng() % 3);
    PositiveBraidWord w = random_positive(rng, n, 1 + rng() % 8);
    for (int i = 1; i < n; ++i) {
      CHECK(right_divides_gen(w, i) ==
            right_quotient(w, PositiveBraidWord(n, {i})).has_value());
    }
  }
}

TEST_CASE("normal form words are canonical and faithful") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    PositiveBraidWord w = random_positive(rng, n, rng() % 10);
    GreedyNormalForm nf(w);
    CHECK(equal(nf.to_word(), w));
    CHECK(GreedyNormalForm(nf.to_word()) == nf);
    // The right-weighted form represents the same braid.
    CHECK(equal(RightWeightedForm(w).to_word(), w));
  }
}

TEST_CASE("positive lift clears inverse letters") {
  BraidWord w(3, {-1});
  PositiveLift lift = positive_lift(w);
  CHECK(lift.exponent == 1);
  CHECK(lift.word.length() == 5);
  // lift.word * sigma_1 = Delta^2.
  CHECK(equal(concat(lift.word, PositiveBraidWord(3, {1})),
              power(delta(3), 2)));

  BraidWord pos(3, {2, 1});
  PositiveLift plain = positive_lift(pos);
  CHECK(plain.exponent == 0);
  CHECK(plain.word == PositiveBraidWord(3, {2, 1}));
}

TEST_CASE("positive lift of w * w^{-1} is a full-twist power") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    std::vector<int> letters;
    int len = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < len; ++i) {
      int g = 1 + static_cast<int>(rng() % (n - 1));
      letters.push_back(rng() % 2 ? g : -g);
    }
    BraidWord w(n, letters);
    BraidWord round = concat(w, w.inverse());
    PositiveLift lift = positive_lift(round);
    CHECK(lift.exponent == len);
    CHECK(equal(lift.word, power(delta(n), 2 * lift.exponent)));
  }
}
