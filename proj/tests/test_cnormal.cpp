#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "braidorder/alternating.hpp"
#include "braidorder/braid.hpp"
#include "braidorder/cnormal.hpp"
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

TEST_CASE("three-strand half twist") {
  CNormalResult r = cnormal_positive(PositiveBraidWord(3, {1, 2, 1}),
                                     Arrangement::trivial(3));
  CHECK(r.word == PositiveBraidWord(3, {2, 1, 2}));
  CHECK(to_string(r.code) == "(1,1,0,1)");
}

TEST_CASE("worked 4-strand example, trivial arrangement") {
  CNormalResult r = cnormal_positive(
      PositiveBraidWord(4, {1, 3, 2, 3, 2, 2, 1, 1, 3}),
      Arrangement::trivial(4));
  CHECK(r.word == PositiveBraidWord(4, {3, 3, 3, 2, 2, 1, 2, 3, 3}));
  CHECK(to_string(r.code) == "((3,0,0),(2,1,0,0),(0),(1,0,0),(2))");
}

TEST_CASE("worked 4-strand example, arrangement (2,1,3)") {
  CNormalResult r = cnormal_positive(
      PositiveBraidWord(4, {1, 3, 2, 3, 2, 2, 1, 1, 3}),
      Arrangement(4, {2, 1, 3}));
  CHECK(r.word == PositiveBraidWord(4, {1, 3, 3, 3, 2, 1, 1, 3, 3}));
  CHECK(to_string(r.code) == "((1,0,0),(3,1,0,0),(2),(2))");
}

TEST_CASE("small words") {
  CNormalResult a = cnormal_positive(PositiveBraidWord(3, {2, 1}),
                                     Arrangement::trivial(3));
  CHECK(a.word == PositiveBraidWord(3, {2, 1}));
  CHECK(to_string(a.code) == "(1,1,0,0)");

  CNormalResult b = cnormal_positive(PositiveBraidWord(3, {2}),
                                     Arrangement::trivial(3));
  CHECK(b.word == PositiveBraidWord(3, {2}));
  CHECK(to_string(b.code) == "(0,1)");

  CNormalResult c = cnormal_positive(PositiveBraidWord(3, {1}),
                                     Arrangement::trivial(3));
  CHECK(c.word == PositiveBraidWord(3, {1}));
  CHECK(to_string(c.code) == "(1,0,0)");

  CNormalResult d = cnormal_positive(PositiveBraidWord(4, {1, 2, 1}),
                                     Arrangement::trivial(4));
  CHECK(d.word == PositiveBraidWord(4, {2, 1, 2}));
  CHECK(to_string(d.code) == "((1,1,0,0),(0),(1,0,0),(0))");

  CNormalResult e = cnormal_positive(PositiveBraidWord(4, {}),
                                     Arrangement::trivial(4));
  CHECK(e.word.empty());
  CHECK(e.code.is_zero());
}

TEST_CASE("two strands degenerate to crossing counts") {
  CNormalResult r = cnormal_positive(PositiveBraidWord(2, {1, 1, 1}),
                                     Arrangement::trivial(2));
  CHECK(r.word == PositiveBraidWord(2, {1, 1, 1}));
  CHECK(r.code == Code::leaf(3));
}

TEST_CASE("normal form is canonical, faithful, and matches the word API") {
  std::mt19937 rng(43);
  std::vector<Arrangement> arrangements = {
      Arrangement(2, {1}),       Arrangement(3, {1, 2}),
      Arrangement(3, {2, 1}),    Arrangement(4, {1, 2, 3}),
      Arrangement(4, {2, 1, 3}), Arrangement(4, {1, 3, 2}),
      Arrangement(4, {3, 1, 2}), Arrangement(4, {2, 3, 1}),
      Arrangement(4, {3, 2, 1}), Arrangement(5, {2, 4, 1, 3})};
  for (int trial = 0; trial < 200; ++trial) {
    const Arrangement& a = arrangements[rng() % arrangements.size()];
    PositiveBraidWord w = random_positive(rng, a.strands(), rng() % 9);
    CNormalResult r = cnormal_positive(w, a);
    CHECK(equal(r.word, w));
    CHECK(tail_twisted_normal_form(w, a) == r.word);
    CNormalResult again = cnormal_positive(r.word, a);
    CHECK(again.word == r.word);
    CHECK(again.code == r.code);
  }
}

TEST_CASE("equal words get identical codes, distinct braids distinct codes") {
  Arrangement a = Arrangement::trivial(4);
  CNormalResult u = cnormal_positive(PositiveBraidWord(4, {1, 3, 2, 1}), a);
  CNormalResult v = cnormal_positive(PositiveBraidWord(4, {3, 1, 2, 1}), a);
  CHECK(u.word == v.word);
  CHECK(u.code == v.code);

  CNormalResult x = cnormal_positive(PositiveBraidWord(4, {1, 2}), a);
  CNormalResult y = cnormal_positive(PositiveBraidWord(4, {2, 1}), a);
  CHECK(!(x.code == y.code));
  CHECK(cmp_left(x.code, y.code) != ComparisonResult::Equal);
}
