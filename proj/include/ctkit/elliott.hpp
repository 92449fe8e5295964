#pragma once

#include <map>
#include <string>
#include <vector>

#include "ctkit/rational.hpp"

namespace ctkit {

// A positive rational or +infinity, the value range of trace norm maps.
struct ExtRational {
  bool infinite = false;
  Rational value;

  static ExtRational inf() { return {true, Rational(0)}; }
  static ExtRational finite(const Rational& r) { return {false, r}; }

  std::string str() const { return infinite ? "inf" : value.str(); }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return a.value == b.value;
  }
  friend bool operator!=(const ExtRational& a, const ExtRational& b) {
    return !(a == b);
  }
  friend bool operator<(const ExtRational& a, const ExtRational& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
  }
};

inline ExtRational ext_min(const ExtRational& a, const ExtRational& b) {
  return a < b ? a : b;
}

// Subgroup of the rationals containing 1, described by a supernatural
// number: the allowed prime powers in denominators. The empty support is Z;
// the `all_primes` flag is the full rationals.
class DimensionGroupQ {
 public:
  struct Exponent {
    bool infinite = false;
    int e = 0;
  };

  static DimensionGroupQ integers() { return DimensionGroupQ(); }
  static DimensionGroupQ rationals() {
    DimensionGroupQ g;
    g.all_primes_ = true;
    return g;
  }

  void set_exponent(long long prime, Exponent e);
  const std::map<long long, Exponent>& exponents() const { return exponents_; }
  bool all_primes() const { return all_primes_; }

  bool contains(const Rational& x) const;
  // Dense in R iff some exponent is infinite (or the group is Q itself);
  // otherwise the group is the lattice (1/b)Z.
  bool is_dense() const;
  long long lattice_denominator() const;  // only valid when !is_dense()

 private:
  bool all_primes_ = false;
  std::map<long long, Exponent> exponents_;
};

struct TraceSimplex {
  int m = 1;  // number of extreme traces
  std::vector<std::string> labels;
};

// Values of the extreme traces on 1 in G: the j-th extreme trace is
// g -> c_j * g.
struct TraceMap {
  std::vector<Rational> c;
};

// Value of the trace norm map at each extreme trace; affine extension to the
// simplex is implicit.
struct TraceNormMap {
  std::vector<ExtRational> f;
};

struct InvariantProfile {
  DimensionGroupQ group;
  TraceSimplex simplex;
  TraceMap traces;
  TraceNormMap norm_map;

  void validate() const;  // sizes agree, c > 0, f > 0
};

// Membership in the dimension range D = {x >= 0 in G : c_j x < f_j for all
// j}. Throws NotInGroup when x is not in the group.
bool range_contains(const InvariantProfile& inv, const Rational& x);

// sup { c_j * g : g in D }, computed in closed form: with m* the smallest
// ratio f_i / c_i, the sup is c_j * m* for a dense group and c_j times the
// largest lattice point strictly below m* otherwise.
ExtRational range_sup(const InvariantProfile& inv, int j);

struct AIReportEntry {
  int j = 0;
  ExtRational sup;
  ExtRational f;
};

struct AIReport {
  bool ai = false;
  std::vector<AIReportEntry> entries;
};

// The algebra is AI (not merely stably AI) iff the trace norm map equals the
// sup of the dimension range under every extreme trace.
AIReport is_AI(const InvariantProfile& inv);

// Finite-valued nonnegative affine increments g_1..g_n whose partial sums
// increase pointwise to the norm map: partial sum k caps each coordinate at
// k * max(1, smallest finite value).
std::vector<std::vector<Rational>> increasing_decomposition(
    const TraceNormMap& f, int n);

// Filters candidates through range membership; the computable stand-in for
// the scale at this invariant level.
std::vector<Rational> scale_from_norm_map(const InvariantProfile& inv,
                                          const std::vector<Rational>& candidates);

}  // namespace ctkit
