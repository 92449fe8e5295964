#pragma once

#include <string>
#include <vector>

#include "ctkit/rational.hpp"

namespace ctkit {

// One endpoint of an interval piece. A closed endpoint is only legal at the
// boundary of the ambient interval: value 0 on the left, value 1 on the
// right, because every set here is open relative to [0,1].
struct Endpoint {
  Rational value;
  bool closed = false;

  friend bool operator==(const Endpoint& a, const Endpoint& b) {
    return a.value == b.value && a.closed == b.closed;
  }
  friend bool operator!=(const Endpoint& a, const Endpoint& b) { return !(a == b); }
};

// A nonempty relatively open subinterval of [0,1]: one of (a,b), [0,b),
// (a,1], [0,1].
struct IntervalPiece {
  Endpoint left;
  Endpoint right;

  // Throws DomainError(InvalidPiece) when the shape constraints fail.
  void validate() const;

  bool contains(const Rational& t) const;
  std::string str() const;

  friend bool operator==(const IntervalPiece& a, const IntervalPiece& b) {
    return a.left == b.left && a.right == b.right;
  }
  friend bool operator!=(const IntervalPiece& a, const IntervalPiece& b) {
    return !(a == b);
  }
};

IntervalPiece make_piece(const Rational& a, bool left_closed, const Rational& b,
                         bool right_closed);
// (a,b) with both endpoints open.
IntervalPiece open_piece(const Rational& a, const Rational& b);

// Canonical relatively open subset of [0,1]: sorted, pairwise disjoint,
// non-mergeable pieces. Two OpenSets describe the same point set iff their
// piece lists are identical.
class OpenSet {
 public:
  OpenSet() = default;

  static OpenSet normalize(std::vector<IntervalPiece> pieces);
  static OpenSet empty_set() { return OpenSet(); }
  static OpenSet full();

  const std::vector<IntervalPiece>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  bool is_full() const;

  bool contains_point(const Rational& t) const;
  std::string str() const;

  friend bool operator==(const OpenSet& a, const OpenSet& b) {
    return a.pieces_ == b.pieces_;
  }
  friend bool operator!=(const OpenSet& a, const OpenSet& b) { return !(a == b); }

 private:
  std::vector<IntervalPiece> pieces_;
};

OpenSet set_union(const OpenSet& a, const OpenSet& b);
OpenSet set_intersection(const OpenSet& a, const OpenSet& b);
// True iff b is a subset of a, decided exactly on canonical piece lists.
bool contains(const OpenSet& a, const OpenSet& b);
// The connected components; their count feeds the presentation module.
const std::vector<IntervalPiece>& components(const OpenSet& a);

}  // namespace ctkit
