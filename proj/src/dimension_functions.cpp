#include "ctkit/dimension_functions.hpp"

#include <algorithm>
#include <stdexcept>

#include "ctkit/errors.hpp"

namespace ctkit {

namespace {
const Rational kZero(0);
const Rational kOne(1);
}  // namespace

StepFunction::StepFunction(std::vector<Rational> breakpoints,
                           std::vector<int> interval_values,
                           std::vector<int> point_values)
    : breakpoints_(std::move(breakpoints)),
      interval_values_(std::move(interval_values)),
      point_values_(std::move(point_values)) {
  if (breakpoints_.size() < 2 || breakpoints_.front() != kZero ||
      breakpoints_.back() != kOne)
    throw std::invalid_argument("breakpoints must run from 0 to 1");
  for (size_t i = 0; i + 1 < breakpoints_.size(); ++i)
    if (!(breakpoints_[i] < breakpoints_[i + 1]))
      throw std::invalid_argument("breakpoints must be strictly increasing");
  if (interval_values_.size() != breakpoints_.size() - 1 ||
      point_values_.size() != breakpoints_.size())
    throw std::invalid_argument("value lists do not match breakpoint count");
  for (int v : interval_values_)
    if (v < 0) throw std::invalid_argument("negative interval value");
  for (int w : point_values_)
    if (w < 0) throw std::invalid_argument("negative point value");
  canonicalize();
}

StepFunction StepFunction::constant(int value) {
  return StepFunction({kZero, kOne}, {value}, {value, value});
}

void StepFunction::canonicalize() {
  std::vector<Rational> bp{breakpoints_.front()};
  std::vector<int> iv;
  std::vector<int> pv{point_values_.front()};
  for (size_t i = 1; i + 1 < breakpoints_.size(); ++i) {
    bool redundant = point_values_[i] == interval_values_[i - 1] &&
                     interval_values_[i - 1] == interval_values_[i];
    if (redundant) continue;
    bp.push_back(breakpoints_[i]);
    iv.push_back(interval_values_[i - 1]);
    pv.push_back(point_values_[i]);
  }
  bp.push_back(breakpoints_.back());
  iv.push_back(interval_values_.back());
  pv.push_back(point_values_.back());
  breakpoints_ = std::move(bp);
  interval_values_ = std::move(iv);
  point_values_ = std::move(pv);
}

int StepFunction::max_value() const {
  int m = 0;
  for (int v : interval_values_) m = std::max(m, v);
  for (int w : point_values_) m = std::max(m, w);
  return m;
}

int evaluate(const StepFunction& f, const Rational& t) {
  if (t < kZero || t > kOne)
    throw DomainError(ErrorCode::OutOfDomain, "t = " + t.str());
  const auto& bp = f.breakpoints();
  auto it = std::lower_bound(bp.begin(), bp.end(), t);
  size_t i = size_t(it - bp.begin());
  if (it != bp.end() && *it == t) return f.point_values()[i];
  return f.interval_values()[i - 1];
}

std::optional<LscWitness> lsc_witness(const StepFunction& f) {
  const auto& iv = f.interval_values();
  const auto& pv = f.point_values();
  size_t m = iv.size();
  for (size_t i = 0; i <= m; ++i) {
    int lim;
    if (i == 0)
      lim = iv[0];
    else if (i == m)
      lim = iv[m - 1];
    else
      lim = std::min(iv[i - 1], iv[i]);
    if (pv[i] > lim)
      return LscWitness{f.breakpoints()[i], pv[i], lim};
  }
  return std::nullopt;
}

bool is_lsc(const StepFunction& f) { return !lsc_witness(f).has_value(); }

namespace {
void require_lsc(const StepFunction& f) {
  if (auto w = lsc_witness(f))
    throw DomainError(ErrorCode::NotLsc,
                      "value " + std::to_string(w->value_at_point) + " at t = " +
                          w->point.str() + " exceeds liminf " +
                          std::to_string(w->liminf));
}
}  // namespace

OpenSet superlevel(const StepFunction& f, int j) {
  require_lsc(f);
  if (j <= 0) throw std::invalid_argument("superlevel threshold must be positive");
  const auto& bp = f.breakpoints();
  const auto& iv = f.interval_values();
  const auto& pv = f.point_values();
  size_t m = iv.size();
  std::vector<IntervalPiece> pieces;
  std::optional<Endpoint> start;
  for (size_t i = 0; i < m; ++i) {
    if (iv[i] >= j) {
      if (!start)
        start = Endpoint{bp[i], i == 0 && pv[0] >= j};
      // Lsc makes a qualifying breakpoint merge its two neighbors, so the
      // piece only closes when the next interval or breakpoint drops below j.
      bool last = i + 1 == m;
      bool continues = !last && pv[i + 1] >= j && iv[i + 1] >= j;
      if (!continues) {
        Endpoint end{bp[i + 1], last && pv[m] >= j};
        pieces.push_back({*start, end});
        start.reset();
      }
    }
  }
  return OpenSet::normalize(std::move(pieces));
}

std::pair<StepFunction, OpenSet> subtract_top(const StepFunction& f) {
  require_lsc(f);
  int top = f.max_value();
  if (top == 0) throw DomainError(ErrorCode::ZeroFunction, "nothing to subtract");
  OpenSet level = superlevel(f, top);
  std::vector<int> iv = f.interval_values();
  std::vector<int> pv = f.point_values();
  for (int& v : iv)
    if (v == top) --v;
  for (int& w : pv)
    if (w == top) --w;
  return {StepFunction(f.breakpoints(), std::move(iv), std::move(pv)),
          std::move(level)};
}

NestedLayers decompose(const StepFunction& f) {
  require_lsc(f);
  NestedLayers out;
  int top = f.max_value();
  for (int j = 1; j <= top; ++j) out.layers.push_back(superlevel(f, j));
  return out;
}

void validate_nested(const NestedLayers& layers) {
  for (size_t j = 0; j + 1 < layers.layers.size(); ++j)
    if (!contains(layers.layers[j], layers.layers[j + 1]))
      throw DomainError(ErrorCode::NotNested,
                        "layer " + std::to_string(j + 2) +
                            " is not contained in layer " + std::to_string(j + 1));
}

StepFunction recompose(const NestedLayers& layers) {
  validate_nested(layers);
  std::vector<Rational> bp{kZero, kOne};
  for (const auto& layer : layers.layers)
    for (const auto& piece : layer.pieces()) {
      bp.push_back(piece.left.value);
      bp.push_back(piece.right.value);
    }
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());

  auto count_at = [&layers](const Rational& t) {
    int c = 0;
    for (const auto& layer : layers.layers)
      if (layer.contains_point(t)) ++c;
    return c;
  };

  std::vector<int> iv;
  std::vector<int> pv;
  for (size_t i = 0; i < bp.size(); ++i) {
    pv.push_back(count_at(bp[i]));
    if (i + 1 < bp.size()) {
      Rational mid = (bp[i] + bp[i + 1]) / Rational(2);
      iv.push_back(count_at(mid));
    }
  }
  return StepFunction(std::move(bp), std::move(iv), std::move(pv));
}

bool is_isomorphic(const StepFunction& f, const StepFunction& g) {
  require_lsc(f);
  require_lsc(g);
  return f == g;
}

bool is_full(const StepFunction& f) {
  require_lsc(f);
  int m = f.point_values()[0];
  for (int v : f.interval_values()) m = std::min(m, v);
  for (int w : f.point_values()) m = std::min(m, w);
  return m >= 1;
}

NestedLayers approximate(const NestedLayers& layers, int n) {
  if (n <= 0) throw std::invalid_argument("piece budget must be positive");
  validate_nested(layers);
  NestedLayers out;
  for (const auto& layer : layers.layers) {
    std::vector<IntervalPiece> kept(
        layer.pieces().begin(),
        layer.pieces().begin() +
            std::min<size_t>(layer.pieces().size(), size_t(n)));
    OpenSet truncated = OpenSet::normalize(std::move(kept));
    if (out.layers.empty())
      out.layers.push_back(std::move(truncated));
    else
      out.layers.push_back(set_intersection(truncated, out.layers.back()));
  }
  return out;
}

}  // namespace ctkit
