#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "braidorder/braid.hpp"
#include "braidorder/permutation.hpp"

using namespace braidorder;

TEST_CASE("basic permutations") {
  Permutation id = Permutation::identity(4);
  CHECK(id.is_identity());
  Permutation t = Permutation::transposition(4, 2);
  CHECK(t.fwd() == std::vector<int>{0, 2, 1, 3});
  CHECK(!t.is_identity());
  Permutation h = Permutation::half_twist(4);
  CHECK(h.is_half_twist());
  CHECK(h.fwd() == std::vector<int>{3, 2, 1, 0});
}

TEST_CASE("composition order: left factor acts first") {
  // then(p, q) tracks a strand through p and then through q.
  Permutation s1 = Permutation::transposition(3, 1);
  Permutation s2 = Permutation::transposition(3, 2);
  Permutation r = then(s1, s2);
  // Position 0 -> s1 -> 1 -> s2 -> 2.
  CHECK(r.fwd() == std::vector<int>{2, 0, 1});
  CHECK(permutation_of(PositiveBraidWord(3, {1, 2})) == r);
}

TEST_CASE("descents match divisibility by a single crossing") {
  // sigma_1 sigma_2: left descent at 1 only, right descent at 2 only.
  Permutation p = permutation_of(PositiveBraidWord(3, {1, 2}));
  CHECK(p.left_descent(1));
  CHECK(!p.left_descent(2));
  CHECK(!p.right_descent(1));
  CHECK(p.right_descent(2));
}

TEST_CASE("incremental crossing updates agree with composition") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    Permutation p = Permutation::identity(n);
    Permutation q = Permutation::identity(n);
    for (int step = 0; step < 12; ++step) {
      int i = 1 + static_cast<int>(rng() % (n - 1));
      p.apply_gen_right(i);
      q = then(q, Permutation::transposition(n, i));
      CHECK(p == q);
    }
    Permutation l = Permutation::identity(n);
    Permutation m = Permutation::identity(n);
    for (int step = 0; step < 12; ++step) {
      int i = 1 + static_cast<int>(rng() % (n - 1));
      l.apply_gen_left(i);
      m = then(Permutation::transposition(n, i), m);
      CHECK(l == m);
    }
  }
}

TEST_CASE("word recovers a reduced expression") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    Permutation p = Permutation::identity(n);
    for (int step = 0; step < 10; ++step) {
      p.apply_gen_right(1 + static_cast<int>(rng() % (n - 1)));
    }
    PositiveBraidWord w = p.word();
    CHECK(static_cast<int>(w.length()) == p.inversions());
    Permutation rebuilt = Permutation::identity(n);
    for (int i : w.letters()) rebuilt.apply_gen_right(i);
    CHECK(rebuilt == p);
  }
}

TEST_CASE("inverse and inversions") {
  Permutation p = permutation_of(PositiveBraidWord(4, {1, 2, 3, 1}));
  Permutation q = p.inverse();
  CHECK(then(p, q).is_identity());
  CHECK(then(q, p).is_identity());
  CHECK(Permutation::half_twist(4).inversions() == 6);
  CHECK(Permutation::identity(4).inversions() == 0);
}
