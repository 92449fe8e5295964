#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ctkit/interval_topology.hpp"
#include "ctkit/rational.hpp"

namespace ctkit {

// Witness of a lower-semicontinuity failure: a breakpoint whose value
// exceeds the smaller neighboring interval value.
struct LscWitness {
  Rational point;
  int value_at_point = 0;
  int liminf = 0;
};

// Integer-valued step function on [0,1] with exact rational breakpoints and
// explicit values at every breakpoint. Stored canonically: a breakpoint whose
// value equals both neighboring interval values (and those agree) is removed.
class StepFunction {
 public:
  // breakpoints t0=0 < ... < tm=1, one interval value per gap, one point
  // value per breakpoint. Values must be nonnegative. Canonicalizes.
  StepFunction(std::vector<Rational> breakpoints, std::vector<int> interval_values,
               std::vector<int> point_values);

  static StepFunction constant(int value);
  static StepFunction zero() { return constant(0); }

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<int>& interval_values() const { return interval_values_; }
  const std::vector<int>& point_values() const { return point_values_; }

  int max_value() const;
  bool is_zero() const { return max_value() == 0; }

  friend bool operator==(const StepFunction& a, const StepFunction& b) {
    return a.breakpoints_ == b.breakpoints_ &&
           a.interval_values_ == b.interval_values_ &&
           a.point_values_ == b.point_values_;
  }
  friend bool operator!=(const StepFunction& a, const StepFunction& b) {
    return !(a == b);
  }

 private:
  void canonicalize();

  std::vector<Rational> breakpoints_;
  std::vector<int> interval_values_;
  std::vector<int> point_values_;
};

// Decreasing chain of relatively open sets; the canonical layer form of an
// lsc step function (layer j is the superlevel set {f >= j}).
struct NestedLayers {
  std::vector<OpenSet> layers;

  friend bool operator==(const NestedLayers& a, const NestedLayers& b) {
    return a.layers == b.layers;
  }
};

int evaluate(const StepFunction& f, const Rational& t);

// nullopt when f is lower semicontinuous, otherwise a failing breakpoint.
std::optional<LscWitness> lsc_witness(const StepFunction& f);
bool is_lsc(const StepFunction& f);

// {t : f(t) >= j}; relatively open exactly because f is lsc.
OpenSet superlevel(const StepFunction& f, int j);

// (f - indicator of {f = max f}, that set). The first component is again lsc
// with strictly smaller maximum.
std::pair<StepFunction, OpenSet> subtract_top(const StepFunction& f);

NestedLayers decompose(const StepFunction& f);
// Requires a decreasing chain; throws NotNested otherwise.
StepFunction recompose(const NestedLayers& layers);

// Canonical equality of step functions; decides isomorphism of the building
// blocks they describe (with the spectrum identification fixed).
bool is_isomorphic(const StepFunction& f, const StepFunction& g);

// f >= 1 everywhere, i.e. the j=1 layer is all of [0,1].
bool is_full(const StepFunction& f);

void validate_nested(const NestedLayers& layers);

// Keeps at most n pieces per layer (first n in canonical order), then
// intersects cumulatively downward so the result is nested again. Monotone
// increasing in n, layerwise, and the identity once every layer fits.
NestedLayers approximate(const NestedLayers& layers, int n);

}  // namespace ctkit
