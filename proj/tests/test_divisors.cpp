#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "braidorder/braid.hpp"
#include "braidorder/divisors.hpp"
#include "braidorder/normal_form.hpp"

using namespace braidorder;

TEST_CASE("maximal right divisor inside a parabolic submonoid") {
  PositiveBraidWord b(4, {1, 3, 2, 3, 2, 2, 1, 1, 3});
  PositiveBraidWord d = max_right_divisor(b, {2, 3});
  CHECK(d == PositiveBraidWord(4, {2, 3, 3}));
  auto q = right_quotient(b, d);
  REQUIRE(q.has_value());
  CHECK(equal(concat(*q, d), b));

  CHECK(max_right_divisor(b, {}).empty());
  CHECK(max_right_divisor(PositiveBraidWord(3, {2, 1}), {1}) ==
        PositiveBraidWord(3, {1}));
  CHECK(max_right_divisor(PositiveBraidWord(3, {2, 1}), {2}).empty());
}

TEST_CASE("peeling mutates the form into the quotient") {
  PositiveBraidWord b(3, {1, 2, 1});
  RightWeightedForm form(b);
  PositiveBraidWord d = peel_max_right_divisor(form, {2});
  CHECK(d == PositiveBraidWord(3, {2}));
  CHECK(equal(form.to_word(), PositiveBraidWord(3, {2, 1})));
  PositiveBraidWord rest = peel_max_right_divisor(form, {1, 2});
  CHECK(equal(rest, PositiveBraidWord(3, {2, 1})));
  CHECK(form.empty());
}

TEST_CASE("quotient admits no further divisor in the set") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + static_cast<int>(rng() % 3);
    std::vector<int> letters;
    int len = rng() % 9;
    for (int i = 0; i < len; ++i) {
      letters.push_back(1 + static_cast<int>(rng() % (n - 1)));
    }
    PositiveBraidWord b(n, letters);
    GeneratorSet S;
    for (int i = 1; i < n; ++i) {
      if (rng() % 2) S.insert(i);
    }
    RightWeightedForm form(b);
    PositiveBraidWord d = peel_max_right_divisor(form, S);
    for (int i : S) {
      CHECK(!form.divisible_by(i));
    }
    CHECK(equal(concat(form.to_word(), d), b));
    // The divisor's letters stay inside S.
    for (int letter : d.letters()) CHECK(S.count(letter) == 1);
  }
}

TEST_CASE("greedy peeling is confluent across peel orders") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 3 + static_cast<int>(rng() % 3);
    std::vector<int> letters;
    int len = rng() % 9;
    for (int i = 0; i < len; ++i) {
      letters.push_back(1 + static_cast<int>(rng() % (n - 1)));
    }
    PositiveBraidWord b(n, letters);
    GeneratorSet S;
    for (int i = 1; i < n; ++i) {
      if (rng() % 2) S.insert(i);
    }
    PositiveBraidWord deterministic = max_right_divisor(b, S);
    PositiveBraidWord randomized = max_right_divisor_with_policy(
        b, S, [&rng](const std::vector<int>& eligible) {
          return eligible[rng() % eligible.size()];
        });
    CHECK(randomized.length() == deterministic.length());
    CHECK(equal(randomized, deterministic));
  }
}
