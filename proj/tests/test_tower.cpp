#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "braidorder/alternating.hpp"
#include "braidorder/braid.hpp"
#include "braidorder/cnormal.hpp"
#include "braidorder/code.hpp"
#include "braidorder/errors.hpp"
#include "braidorder/tower.hpp"

using namespace braidorder;

namespace {

PositiveBraidWord w4(std::vector<int> letters) {
  return PositiveBraidWord(4, std::move(letters));
}

}  // namespace

TEST_CASE("worked 4-strand split, trivial arrangement") {
  // sigma_1 | sigma_3 sigma_2 sigma_3 | sigma_2^2 sigma_1^2 || sigma_3:
  // A_3 .. A_0 then X_1, X_2.  Each block braid is coded canonically in its
  // slot, so A_2 = sigma_3 sigma_2 sigma_3 contributes (1,1,0,1).
  Tower t{w4({1, 3, 2, 3, 2, 2, 1, 1, 3}),
          {w4({}), w4({2, 2, 1, 1}), w4({3, 2, 3}), w4({1})},
          {w4({}), w4({3})}};
  Code code = code_from_tower(t, Arrangement::trivial(4));
  CHECK(to_string(code) == "((1,0,0),(1,1,0,1),(2,2,0,0),(0),(0),(1))");

  // Every split's code is bounded by the canonical one from the tail side.
  Code canonical = cnormal_positive(t.word, Arrangement::trivial(4)).code;
  CHECK(to_string(canonical) == "((3,0,0),(2,1,0,0),(0),(1,0,0),(2))");
  CHECK(cmp_right(code, canonical) == ComparisonResult::Less);
}

TEST_CASE("worked 4-strand split, arrangement (2,1,3)") {
  Arrangement a(4, {2, 1, 3});
  Tower t{w4({1, 3, 2, 3, 2, 2, 1, 1, 3}),
          {w4({3, 2, 3, 2, 2}), w4({1})},
          {w4({1, 1}), w4({3})}};
  Code code = code_from_tower(t, a);
  CHECK(to_string(code) == "((1,0,0),(3,1,0,1),(2),(1))");

  Code canonical = cnormal_positive(t.word, a).code;
  CHECK(to_string(canonical) == "((1,0,0),(3,1,0,0),(2),(2))");
  CHECK(cmp_right(code, canonical) == ComparisonResult::Less);
}

TEST_CASE("the canonical split reproduces the canonical code") {
  std::mt19937 rng(47);
  std::vector<Arrangement> arrangements = {
      Arrangement(3, {1, 2}), Arrangement(3, {2, 1}),
      Arrangement(4, {1, 2, 3}), Arrangement(4, {2, 1, 3}),
      Arrangement(4, {3, 1, 2})};
  for (int trial = 0; trial < 120; ++trial) {
    const Arrangement& a = arrangements[rng() % arrangements.size()];
    int n = a.strands();
    std::vector<int> letters;
    int len = rng() % 8;
    for (int i = 0; i < len; ++i) {
      letters.push_back(1 + static_cast<int>(rng() % (n - 1)));
    }
    PositiveBraidWord w(n, letters);
    CNormalResult canonical = cnormal_positive(w, a);

    // Rebuild the canonical top-level split of the canonical word.
    TailTwistDecomposition parts = tail_twist_decomposition(canonical.word, a);
    AlternateDecomposition alt = alternate_decomposition(parts.main);
    std::vector<PositiveBraidWord> a_factors{parts.head};
    for (std::size_t p = 1; p < alt.factors.size(); ++p) {
      a_factors.push_back(alt.factors[p]);
    }
    if (alt.factors.empty() && !parts.main.empty()) {
      FAIL("alternating decomposition lost the main part");
    }
    Tower t{canonical.word, a_factors, parts.blocks};
    CHECK(code_from_tower(t, a) == canonical.code);
  }
}

TEST_CASE("structure and membership violations") {
  Arrangement a = Arrangement::trivial(4);
  // Word does not equal the concatenation of the factors.
  Tower broken{w4({1, 2}), {w4({2})}, {w4({}), w4({})}};
  CHECK_THROWS_AS(code_from_tower(broken, a), Error);

  // Odd slots may not contain sigma_3.
  Tower odd_bad{w4({3, 3}), {w4({}), w4({3})}, {w4({3}), w4({})}};
  CHECK_THROWS_AS(code_from_tower(odd_bad, a), MembershipViolation);

  // A_0 and even slots may not contain sigma_1.
  Tower even_bad{w4({1}), {w4({1})}, {w4({}), w4({})}};
  CHECK_THROWS_AS(code_from_tower(even_bad, a), MembershipViolation);

  // X_2 lives in the parabolic generated by sigma_3 alone.
  Tower block_bad{w4({2}), {w4({})}, {w4({}), w4({2})}};
  CHECK_THROWS_AS(code_from_tower(block_bad, a), MembershipViolation);

  // Wrong number of tail blocks.
  Tower count_bad{w4({2}), {w4({})}, {w4({2})}};
  CHECK_THROWS_AS(code_from_tower(count_bad, a), Error);
}

TEST_CASE("two-strand towers degenerate to the bare word") {
  Tower t{PositiveBraidWord(2, {1, 1}), {PositiveBraidWord(2, {1, 1})}, {}};
  CHECK(code_from_tower(t, Arrangement::trivial(2)) == Code::leaf(2));
}
