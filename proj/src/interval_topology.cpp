#include "ctkit/interval_topology.hpp"

#include <algorithm>

#include "ctkit/errors.hpp"

namespace ctkit {

namespace {

const Rational kZero(0);
const Rational kOne(1);

// Order keys: a "smaller" left endpoint starts earlier ([0 before (0); a
// "larger" right endpoint reaches further ((x,1] beyond (x,1)).
bool left_le(const Endpoint& a, const Endpoint& b) {
  if (a.value != b.value) return a.value < b.value;
  return a.closed || !b.closed;
}
bool right_le(const Endpoint& a, const Endpoint& b) {
  if (a.value != b.value) return a.value < b.value;
  return b.closed || !a.closed;
}

}  // namespace

void IntervalPiece::validate() const {
  if (left.value < kZero || right.value > kOne)
    throw DomainError(ErrorCode::InvalidPiece,
                      "piece " + str() + " leaves [0,1]");
  if (!(left.value < right.value))
    throw DomainError(ErrorCode::InvalidPiece,
                      "piece " + str() + " is empty or degenerate");
  if (left.closed && left.value != kZero)
    throw DomainError(ErrorCode::InvalidPiece,
                      "closed left endpoint at interior point " + left.value.str());
  if (right.closed && right.value != kOne)
    throw DomainError(ErrorCode::InvalidPiece,
                      "closed right endpoint at interior point " + right.value.str());
}

bool IntervalPiece::contains(const Rational& t) const {
  bool lo = left.value < t || (left.closed && t == left.value);
  bool hi = t < right.value || (right.closed && t == right.value);
  return lo && hi;
}

std::string IntervalPiece::str() const {
  std::string s;
  s += left.closed ? '[' : '(';
  s += left.value.str();
  s += ',';
  s += right.value.str();
  s += right.closed ? ']' : ')';
  return s;
}

IntervalPiece make_piece(const Rational& a, bool left_closed, const Rational& b,
                         bool right_closed) {
  IntervalPiece p{{a, left_closed}, {b, right_closed}};
  p.validate();
  return p;
}

IntervalPiece open_piece(const Rational& a, const Rational& b) {
  return make_piece(a, false, b, false);
}

OpenSet OpenSet::normalize(std::vector<IntervalPiece> pieces) {
  for (const auto& p : pieces) p.validate();
  std::sort(pieces.begin(), pieces.end(),
            [](const IntervalPiece& a, const IntervalPiece& b) {
              if (a.left.value != b.left.value) return a.left.value < b.left.value;
              if (a.left.closed != b.left.closed) return a.left.closed;
              return right_le(b.right, a.right) && a.right != b.right;
            });
  OpenSet out;
  for (const auto& p : pieces) {
    if (!out.pieces_.empty()) {
      IntervalPiece& cur = out.pieces_.back();
      // Two relatively open pieces merge iff the next one starts strictly
      // inside the current one. Touching only at a shared open endpoint
      // keeps them separate components.
      if (p.left.value < cur.right.value) {
        if (right_le(cur.right, p.right)) cur.right = p.right;
        continue;
      }
    }
    out.pieces_.push_back(p);
  }
  return out;
}

OpenSet OpenSet::full() {
  return normalize({make_piece(kZero, true, kOne, true)});
}

bool OpenSet::is_full() const {
  return pieces_.size() == 1 && pieces_[0] == make_piece(kZero, true, kOne, true);
}

bool OpenSet::contains_point(const Rational& t) const {
  // Binary search on the sorted piece list.
  size_t lo = 0, hi = pieces_.size();
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (pieces_[mid].right.value < t)
      lo = mid + 1;
    else
      hi = mid;
  }
  for (size_t i = lo; i < pieces_.size() && i < lo + 2; ++i)
    if (pieces_[i].contains(t)) return true;
  if (lo > 0 && pieces_[lo - 1].contains(t)) return true;
  return false;
}

std::string OpenSet::str() const {
  if (pieces_.empty()) return "{}";
  std::string s = "{";
  for (size_t i = 0; i < pieces_.size(); ++i) {
    if (i) s += ", ";
    s += pieces_[i].str();
  }
  s += "}";
  return s;
}

OpenSet set_union(const OpenSet& a, const OpenSet& b) {
  std::vector<IntervalPiece> all = a.pieces();
  all.insert(all.end(), b.pieces().begin(), b.pieces().end());
  return OpenSet::normalize(std::move(all));
}

OpenSet set_intersection(const OpenSet& a, const OpenSet& b) {
  std::vector<IntervalPiece> out;
  size_t i = 0, j = 0;
  const auto& pa = a.pieces();
  const auto& pb = b.pieces();
  while (i < pa.size() && j < pb.size()) {
    const IntervalPiece& p = pa[i];
    const IntervalPiece& q = pb[j];
    Endpoint lo = left_le(p.left, q.left) ? q.left : p.left;
    Endpoint hi = right_le(p.right, q.right) ? p.right : q.right;
    if (lo.value < hi.value) out.push_back({lo, hi});
    if (right_le(p.right, q.right))
      ++i;
    else
      ++j;
  }
  return OpenSet::normalize(std::move(out));
}

bool contains(const OpenSet& a, const OpenSet& b) {
  // Each piece of b is connected, and distinct canonical pieces of a are
  // separated by at least one missing point, so a piece of b fits in a iff
  // it fits in a single piece of a.
  const auto& pa = a.pieces();
  size_t i = 0;
  for (const auto& q : b.pieces()) {
    while (i < pa.size() && pa[i].right.value < q.right.value) ++i;
    if (i == pa.size() || !left_le(pa[i].left, q.left) ||
        !right_le(q.right, pa[i].right))
      return false;
  }
  return true;
}

const std::vector<IntervalPiece>& components(const OpenSet& a) {
  return a.pieces();
}

}  // namespace ctkit
