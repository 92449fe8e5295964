#include <doctest.h>

#include "ctkit/dimension_functions.hpp"
#include "ctkit/errors.hpp"
#include "ctkit/json_io.hpp"
#include "test_support.hpp"

using namespace ctkit;
using ctkit::testing::Rng;

namespace {

Rational r(long long n, long long d = 1) { return Rational(n, d); }

// The two-level workhorse: 1 on [0,1], an extra level on (1/4,1/2).
StepFunction two_level() {
  return StepFunction({r(0), r(1, 4), r(1, 2), r(1)}, {1, 2, 1}, {1, 1, 1, 1});
}

}  // namespace

TEST_CASE("evaluate") {
  CHECK(evaluate(StepFunction::constant(1), r(1, 3)) == 1);
  CHECK(evaluate(two_level(), r(3, 8)) == 2);
  CHECK(evaluate(two_level(), r(1, 4)) == 1);
  CHECK_THROWS_AS(evaluate(two_level(), r(3, 2)), DomainError);
}

TEST_CASE("lsc detection with witness") {
  CHECK(is_lsc(StepFunction::constant(1)));
  StepFunction bad({r(0), r(1, 2), r(1)}, {1, 1}, {1, 2, 1});
  auto w = lsc_witness(bad);
  REQUIRE(w.has_value());
  CHECK(w->point == r(1, 2));
  CHECK(w->value_at_point == 2);
  CHECK(w->liminf == 1);
  CHECK(is_lsc(two_level()));
}

TEST_CASE("superlevel sets") {
  CHECK(superlevel(StepFunction::constant(1), 1) == OpenSet::full());
  CHECK(superlevel(two_level(), 2) ==
        OpenSet::normalize({open_piece(r(1, 4), r(1, 2))}));
  CHECK(superlevel(two_level(), 5).empty());
  StepFunction bad({r(0), r(1, 2), r(1)}, {1, 1}, {1, 2, 1});
  CHECK_THROWS_AS(superlevel(bad, 1), DomainError);
}

TEST_CASE("subtract_top") {
  auto [f1, m1] = subtract_top(StepFunction::constant(1));
  CHECK(f1 == StepFunction::zero());
  CHECK(m1 == OpenSet::full());

  auto [f2, m2] = subtract_top(two_level());
  CHECK(f2 == StepFunction::constant(1));
  CHECK(m2 == OpenSet::normalize({open_piece(r(1, 4), r(1, 2))}));

  auto [f3, m3] = subtract_top(StepFunction::constant(3));
  CHECK(f3 == StepFunction::constant(2));
  CHECK(m3 == OpenSet::full());

  CHECK_THROWS_AS(subtract_top(StepFunction::zero()), DomainError);
}

TEST_CASE("decompose/recompose on fixed cases") {
  CHECK(decompose(StepFunction::zero()).layers.empty());
  NestedLayers l = decompose(two_level());
  REQUIRE(l.layers.size() == 2);
  CHECK(l.layers[0] == OpenSet::full());
  CHECK(l.layers[1] == OpenSet::normalize({open_piece(r(1, 4), r(1, 2))}));
  CHECK(recompose(l) == two_level());

  NestedLayers two_full{{OpenSet::full(), OpenSet::full()}};
  CHECK(decompose(StepFunction::constant(2)) == two_full);
  CHECK(recompose(NestedLayers{}) == StepFunction::zero());
  CHECK(recompose(NestedLayers{{OpenSet::full()}}) == StepFunction::constant(1));

  NestedLayers not_nested{{OpenSet::normalize({open_piece(r(0), r(1, 2))}),
                           OpenSet::normalize({open_piece(r(1, 4), r(3, 4))})}};
  CHECK_THROWS_AS(recompose(not_nested), DomainError);
}

TEST_CASE("decomposition matches the pointwise counting oracle") {
  Rng rng(101);
  for (int trial = 0; trial < 150; ++trial) {
    StepFunction f = ctkit::testing::random_lsc(rng);
    NestedLayers layers = decompose(f);
    for (size_t j = 0; j + 1 < layers.layers.size(); ++j)
      CHECK(contains(layers.layers[j], layers.layers[j + 1]));
    auto pts = ctkit::testing::sample_points(f, rng, 60);
    for (const auto& t : pts) {
      int count = 0;
      for (const auto& layer : layers.layers)
        if (layer.contains_point(t)) ++count;
      CHECK(count == evaluate(f, t));
    }
    CHECK(recompose(layers) == f);
  }
}

TEST_CASE("iterated subtract_top extracts the same layers, top first") {
  Rng rng(102);
  for (int trial = 0; trial < 80; ++trial) {
    StepFunction f = ctkit::testing::random_lsc(rng);
    NestedLayers layers = decompose(f);
    StepFunction g = f;
    std::vector<OpenSet> tops;
    while (!g.is_zero()) {
      auto [next, top] = subtract_top(g);
      CHECK(is_lsc(next));
      tops.push_back(top);
      g = next;
    }
    REQUIRE(tops.size() == layers.layers.size());
    for (size_t i = 0; i < tops.size(); ++i)
      CHECK(tops[i] == layers.layers[layers.layers.size() - 1 - i]);
  }
}

TEST_CASE("decompose(recompose(L)) = L for nested chains") {
  Rng rng(103);
  for (int trial = 0; trial < 120; ++trial) {
    NestedLayers l = ctkit::testing::random_nested_layers(rng);
    CHECK(decompose(recompose(l)) == l);
  }
}

TEST_CASE("isomorphism is canonical equality") {
  StepFunction f = two_level();
  CHECK(is_isomorphic(f, f));
  CHECK_FALSE(is_isomorphic(StepFunction::constant(1), StepFunction::constant(2)));
  // same function, different pre-normalization encodings
  StepFunction g({r(0), r(1, 8), r(1, 4), r(1, 2), r(1)}, {1, 1, 2, 1},
                 {1, 1, 1, 1, 1});
  CHECK(is_isomorphic(f, g));
}

TEST_CASE("fullness") {
  CHECK(is_full(StepFunction::constant(1)));
  CHECK(is_full(two_level()));
  StepFunction vanishing({r(0), r(1, 2), r(1)}, {1, 1}, {1, 1, 0});
  CHECK_FALSE(is_full(vanishing));
  Rng rng(104);
  for (int trial = 0; trial < 60; ++trial) {
    StepFunction f = ctkit::testing::random_lsc(rng);
    bool full = is_full(f);
    NestedLayers layers = decompose(f);
    bool layer_full = !layers.layers.empty() && layers.layers[0].is_full();
    CHECK(full == layer_full);
  }
}

TEST_CASE("approximate truncates, restores nesting, and is monotone") {
  OpenSet big = OpenSet::normalize({open_piece(r(0), r(1, 4)),
                                    open_piece(r(1, 2), r(3, 4)),
                                    open_piece(r(7, 8), r(1))});
  NestedLayers single{{big}};
  NestedLayers t2 = approximate(single, 2);
  REQUIRE(t2.layers.size() == 1);
  CHECK(t2.layers[0] == OpenSet::normalize({open_piece(r(0), r(1, 4)),
                                            open_piece(r(1, 2), r(3, 4))}));
  CHECK(approximate(single, 3) == single);

  Rng rng(105);
  for (int trial = 0; trial < 80; ++trial) {
    NestedLayers l = ctkit::testing::random_nested_layers(rng, 5, 8);
    size_t max_pieces = 1;
    for (const auto& layer : l.layers)
      max_pieces = std::max(max_pieces, layer.pieces().size());
    NestedLayers prev;
    for (int n = 1; n <= int(max_pieces); ++n) {
      NestedLayers ap = approximate(l, n);
      for (size_t j = 0; j < ap.layers.size(); ++j) {
        CHECK(ap.layers[j].pieces().size() <= size_t(n));
        if (j + 1 < ap.layers.size())
          CHECK(contains(ap.layers[j], ap.layers[j + 1]));
        CHECK(contains(l.layers[j], ap.layers[j]));
        if (n > 1) CHECK(contains(ap.layers[j], prev.layers[j]));
      }
      prev = ap;
    }
    CHECK(approximate(l, int(max_pieces)) == l);
  }
}

TEST_CASE("approximate converges pointwise once n covers the pieces") {
  Rng rng(106);
  for (int trial = 0; trial < 40; ++trial) {
    NestedLayers l = ctkit::testing::random_nested_layers(rng, 4, 6);
    StepFunction f = recompose(l);
    size_t max_pieces = 1;
    for (const auto& layer : l.layers)
      max_pieces = std::max(max_pieces, layer.pieces().size());
    auto pts = ctkit::testing::sample_points(f, rng, 20);
    for (const auto& t : pts) {
      int target = evaluate(f, t);
      // find the first budget from which the value stays put
      int n0 = int(max_pieces);
      for (int n = int(max_pieces); n >= 1; --n) {
        if (evaluate(recompose(approximate(l, n)), t) == target)
          n0 = n;
        else
          break;
      }
      for (int n = n0; n <= int(max_pieces); ++n)
        CHECK(evaluate(recompose(approximate(l, n)), t) == target);
    }
  }
}

TEST_CASE("json round trip and parse failures") {
  Rng rng(107);
  for (int trial = 0; trial < 100; ++trial) {
    StepFunction f = ctkit::testing::random_lsc(rng);
    Json j = to_json(f);
    CHECK(step_function_from_json(j) == f);
  }
  Json bad_rat = {{"breakpoints", {"0", "1/0", "1"}},
                  {"interval_values", {1, 1}},
                  {"point_values", {1, 1, 1}}};
  CHECK_THROWS_AS(step_function_from_json(bad_rat), ParseError);
  Json unsorted = {{"breakpoints", {"0", "3/4", "1/2", "1"}},
                   {"interval_values", {1, 1, 1}},
                   {"point_values", {1, 1, 1, 1}}};
  CHECK_THROWS_AS(step_function_from_json(unsorted), ParseError);
  Json negative = {{"breakpoints", {"0", "1"}},
                   {"interval_values", {-1}},
                   {"point_values", {0, 0}}};
  CHECK_THROWS_AS(step_function_from_json(negative), ParseError);
}
