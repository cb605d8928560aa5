#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "braidorder/arrangement.hpp"
#include "braidorder/errors.hpp"

using namespace braidorder;

TEST_CASE("arrangements validate as permutations of the generator indices") {
  CHECK_NOTHROW(Arrangement(4, {2, 1, 3}));
  CHECK(Arrangement::trivial(4).entries() == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(Arrangement(4, {1, 2}), Error);        // wrong size
  CHECK_THROWS_AS(Arrangement(4, {1, 1, 3}), Error);     // duplicate
  CHECK_THROWS_AS(Arrangement(4, {0, 2, 3}), Error);     // out of range
  CHECK_THROWS_AS(Arrangement(4, {1, 2, 4}), Error);     // out of range
  Arrangement a(4, {2, 1, 3});
  CHECK(a.k(1) == 2);
  CHECK(a.k(2) == 1);
  CHECK(a.k(3) == 3);
}

TEST_CASE("block bounds") {
  Arrangement a(4, {2, 1, 3});
  CHECK(block_bounds(a, 1) == BlockBounds{1, 1, 2});
  CHECK(block_bounds(a, 2) == BlockBounds{2, 3, 4});

  Arrangement t(4, {1, 2, 3});
  CHECK(block_bounds(t, 1) == BlockBounds{1, 2, 4});
  CHECK(block_bounds(t, 2) == BlockBounds{2, 3, 4});

  Arrangement t3(3, {1, 2});
  CHECK(block_bounds(t3, 1) == BlockBounds{1, 2, 3});
  Arrangement r3(3, {2, 1});
  CHECK(block_bounds(r3, 1) == BlockBounds{1, 1, 2});
}

TEST_CASE("derived arrangement for the head slot") {
  CHECK(derive_k0(Arrangement(4, {2, 1, 3})) == Arrangement(3, {1, 2}));
  CHECK(derive_k0(Arrangement(4, {3, 2, 1})) == Arrangement(3, {2, 1}));
  CHECK(derive_k0(Arrangement(4, {1, 2, 3})) == Arrangement(3, {1, 2}));
  CHECK(derive_k0(Arrangement(3, {2, 1})) == Arrangement(2, {1}));
}

TEST_CASE("derived arrangements for tail blocks") {
  CHECK(derive_kj(Arrangement(4, {2, 1, 3}), 1) == Arrangement(2, {1}));
  CHECK(derive_kj(Arrangement(4, {1, 2, 3}), 1) == Arrangement(3, {1, 2}));
  CHECK(derive_kj(Arrangement(4, {1, 2, 3}), 2) == Arrangement(2, {1}));
  CHECK(derive_kj(Arrangement(3, {1, 2}), 1) == Arrangement(2, {1}));
}

TEST_CASE("parse and format") {
  CHECK(to_string(Arrangement(4, {2, 1, 3})) == "2,1,3");
  CHECK(parse_arrangement("2,1,3", 4) == Arrangement(4, {2, 1, 3}));
  CHECK(parse_arrangement("1", 2) == Arrangement::trivial(2));
  CHECK_THROWS_AS(parse_arrangement("2,1", 4), Error);
  CHECK_THROWS_AS(parse_arrangement("a,b,c", 4), Error);
  CHECK_THROWS_AS(parse_arrangement("", 3), Error);
}
