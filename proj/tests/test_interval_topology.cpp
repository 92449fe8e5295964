#include <doctest.h>

#include "ctkit/errors.hpp"
#include "ctkit/interval_topology.hpp"
#include "ctkit/json_io.hpp"
#include "test_support.hpp"

using namespace ctkit;
using ctkit::testing::Rng;

namespace {
Rational r(long long n, long long d = 1) { return Rational(n, d); }
}  // namespace

TEST_CASE("pieces touching only at an excluded endpoint stay separate") {
  OpenSet s = OpenSet::normalize(
      {open_piece(r(1, 4), r(1, 2)), open_piece(r(1, 2), r(3, 4))});
  REQUIRE(s.pieces().size() == 2);
  CHECK(s.pieces()[0] == open_piece(r(1, 4), r(1, 2)));
  CHECK(s.pieces()[1] == open_piece(r(1, 2), r(3, 4)));
}

TEST_CASE("overlapping pieces merge") {
  OpenSet s = OpenSet::normalize(
      {open_piece(r(1, 4), r(3, 4)), open_piece(r(1, 2), r(7, 8))});
  REQUIRE(s.pieces().size() == 1);
  CHECK(s.pieces()[0] == open_piece(r(1, 4), r(7, 8)));
}

TEST_CASE("cover of [0,1] normalizes to the full piece") {
  OpenSet s = OpenSet::normalize({make_piece(r(0), true, r(1, 2), false),
                                  make_piece(r(1, 4), false, r(1), true)});
  CHECK(s == OpenSet::full());
  CHECK(s.is_full());
}

TEST_CASE("invalid pieces are rejected") {
  CHECK_THROWS_AS(make_piece(r(1, 4), true, r(1, 2), false), DomainError);
  CHECK_THROWS_AS(make_piece(r(1, 4), false, r(1, 2), true), DomainError);
  CHECK_THROWS_AS(open_piece(r(1, 2), r(1, 2)), DomainError);
  CHECK_THROWS_AS(open_piece(r(3, 4), r(1, 2)), DomainError);
}

TEST_CASE("union basics") {
  OpenSet a = OpenSet::normalize({open_piece(r(0), r(1))});
  CHECK(set_union(OpenSet::empty_set(), a) == a);
  OpenSet l = OpenSet::normalize({make_piece(r(0), true, r(1, 4), false)});
  OpenSet rr = OpenSet::normalize({make_piece(r(3, 4), false, r(1), true)});
  OpenSet u = set_union(l, rr);
  REQUIRE(u.pieces().size() == 2);
  OpenSet mid1 = OpenSet::normalize({open_piece(r(0), r(1, 2))});
  OpenSet mid2 = OpenSet::normalize({open_piece(r(1, 4), r(1))});
  CHECK(set_union(mid1, mid2) == OpenSet::normalize({open_piece(r(0), r(1))}));
}

TEST_CASE("intersection basics") {
  OpenSet x = OpenSet::normalize(
      {open_piece(r(1, 8), r(1, 4)), make_piece(r(1, 2), false, r(1), true)});
  CHECK(set_intersection(OpenSet::full(), x) == x);
  OpenSet a = OpenSet::normalize({open_piece(r(0), r(1, 2))});
  OpenSet b = OpenSet::normalize({open_piece(r(1, 4), r(1))});
  CHECK(set_intersection(a, b) ==
        OpenSet::normalize({open_piece(r(1, 4), r(1, 2))}));
  OpenSet c = OpenSet::normalize({open_piece(r(0), r(1, 4))});
  OpenSet d = OpenSet::normalize({open_piece(r(1, 2), r(1))});
  CHECK(set_intersection(c, d).empty());
}

TEST_CASE("containment") {
  OpenSet half = OpenSet::normalize({open_piece(r(0), r(1, 2))});
  CHECK(contains(OpenSet::full(), half));
  CHECK(contains(half, OpenSet::normalize({open_piece(r(1, 4), r(1, 2))})));
  CHECK_FALSE(contains(half, OpenSet::normalize({open_piece(r(1, 4), r(3, 4))})));
  // witness: 5/8 is in the second set but not the first
  CHECK_FALSE(half.contains_point(r(5, 8)));
}

TEST_CASE("components") {
  CHECK(components(OpenSet::empty_set()).empty());
  CHECK(components(OpenSet::full()).size() == 1);
  OpenSet two = OpenSet::normalize({make_piece(r(0), true, r(1, 4), false),
                                    open_piece(r(1, 2), r(3, 4))});
  CHECK(components(two).size() == 2);
}

TEST_CASE("normalize is idempotent and membership matches a raw oracle") {
  Rng rng(20240811);
  for (int trial = 0; trial < 100; ++trial) {
    auto raw = ctkit::testing::random_pieces(rng, 10);
    OpenSet s = OpenSet::normalize(raw);
    CHECK(OpenSet::normalize(s.pieces()) == s);
    for (int k = 0; k < 1000; ++k) {
      Rational t = ctkit::testing::random_rational(rng, 64);
      CHECK(s.contains_point(t) == ctkit::testing::raw_membership(raw, t));
    }
    // endpoints of the raw pieces are the interesting places
    for (const auto& p : raw) {
      for (const Rational& t : {p.left.value, p.right.value})
        CHECK(s.contains_point(t) == ctkit::testing::raw_membership(raw, t));
    }
  }
}

TEST_CASE("open set json round trip and rejection of bad pieces") {
  Rng rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    OpenSet s = OpenSet::normalize(ctkit::testing::random_pieces(rng, 8));
    CHECK(openset_from_json(to_json(s), "s") == s);
  }
  Json closed_interior = {
      {"pieces",
       {{{"left", {{"v", "1/4"}, {"closed", true}}},
         {"right", {{"v", "1/2"}, {"closed", false}}}}}}};
  CHECK_THROWS_AS(openset_from_json(closed_interior, "s"), ParseError);
}

TEST_CASE("boolean algebra identities on canonical forms") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    OpenSet a = OpenSet::normalize(ctkit::testing::random_pieces(rng, 6));
    OpenSet b = OpenSet::normalize(ctkit::testing::random_pieces(rng, 6));
    OpenSet c = OpenSet::normalize(ctkit::testing::random_pieces(rng, 6));
    CHECK(set_union(a, b) == set_union(b, a));
    CHECK(set_intersection(a, b) == set_intersection(b, a));
    CHECK(set_union(set_union(a, b), c) == set_union(a, set_union(b, c)));
    CHECK(set_intersection(set_intersection(a, b), c) ==
          set_intersection(a, set_intersection(b, c)));
    CHECK(set_union(a, OpenSet::empty_set()) == a);
    CHECK(set_intersection(a, OpenSet::full()) == a);
    // mutual containment is structural equality
    if (contains(a, b) && contains(b, a)) CHECK(a == b);
    CHECK(contains(set_union(a, b), a));
    CHECK(contains(a, set_intersection(a, b)));
  }
}
