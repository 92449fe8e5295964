#include "ctkit/elliott.hpp"

#include <algorithm>
#include <stdexcept>

#include "ctkit/errors.hpp"

namespace ctkit {

void DimensionGroupQ::set_exponent(long long prime, Exponent e) {
  if (prime < 2) throw std::invalid_argument("prime must be >= 2");
  if (!e.infinite && e.e < 0) throw std::invalid_argument("negative exponent");
  if (!e.infinite && e.e == 0) {
    exponents_.erase(prime);
    return;
  }
  exponents_[prime] = e;
}

bool DimensionGroupQ::contains(const Rational& x) const {
  if (all_primes_) return true;
  long long q = x.den();
  for (const auto& [p, exp] : exponents_) {
    int e = 0;
    while (q % p == 0) {
      q /= p;
      ++e;
    }
    if (!exp.infinite && e > exp.e) return false;
  }
  return q == 1;  // leftover prime factors are not in the support
}

bool DimensionGroupQ::is_dense() const {
  if (all_primes_) return true;
  for (const auto& [p, exp] : exponents_)
    if (exp.infinite) return true;
  return false;
}

long long DimensionGroupQ::lattice_denominator() const {
  if (is_dense())
    throw std::logic_error("dense group has no lattice denominator");
  long long b = 1;
  for (const auto& [p, exp] : exponents_)
    for (int i = 0; i < exp.e; ++i) {
      if (b > (1LL << 62) / p) throw std::overflow_error("lattice denominator overflow");
      b *= p;
    }
  return b;
}

void InvariantProfile::validate() const {
  if (simplex.m < 1) throw std::invalid_argument("simplex needs m >= 1");
  if (int(traces.c.size()) != simplex.m ||
      int(norm_map.f.size()) != simplex.m)
    throw std::invalid_argument("traces/norm map size mismatch with simplex");
  for (const auto& cj : traces.c)
    if (cj.sign() <= 0) throw std::invalid_argument("trace scalars must be positive");
  for (const auto& fj : norm_map.f)
    if (!fj.infinite && fj.value.sign() <= 0)
      throw std::invalid_argument("norm map values must be positive");
}

bool range_contains(const InvariantProfile& inv, const Rational& x) {
  inv.validate();
  if (!inv.group.contains(x))
    throw DomainError(ErrorCode::NotInGroup, "x = " + x.str());
  if (x.sign() < 0) return false;
  for (int j = 0; j < inv.simplex.m; ++j) {
    const ExtRational& fj = inv.norm_map.f[size_t(j)];
    if (fj.infinite) continue;
    if (!(inv.traces.c[size_t(j)] * x < fj.value)) return false;
  }
  return true;
}

namespace {

ExtRational min_ratio(const InvariantProfile& inv) {
  ExtRational m = ExtRational::inf();
  for (int j = 0; j < inv.simplex.m; ++j) {
    const ExtRational& fj = inv.norm_map.f[size_t(j)];
    if (fj.infinite) continue;
    ExtRational r = ExtRational::finite(fj.value / inv.traces.c[size_t(j)]);
    m = ext_min(m, r);
  }
  return m;
}

}  // namespace

ExtRational range_sup(const InvariantProfile& inv, int j) {
  inv.validate();
  if (j < 0 || j >= inv.simplex.m)
    throw std::invalid_argument("extreme point index out of range");
  ExtRational mstar = min_ratio(inv);
  if (mstar.infinite) return ExtRational::inf();
  const Rational& cj = inv.traces.c[size_t(j)];
  if (inv.group.is_dense())
    return ExtRational::finite(cj * mstar.value);
  // Lattice (1/b)Z: the largest multiple of 1/b strictly below m*. Since
  // m* > 0, the multiple 0 always qualifies.
  long long b = inv.group.lattice_denominator();
  Rational mb = mstar.value * Rational(b);
  long long k = mb.is_integer() ? mb.num() - 1 : mb.floor();
  if (k < 0) k = 0;
  return ExtRational::finite(cj * Rational(k, b));
}

AIReport is_AI(const InvariantProfile& inv) {
  inv.validate();
  AIReport report;
  report.ai = true;
  for (int j = 0; j < inv.simplex.m; ++j) {
    AIReportEntry e;
    e.j = j;
    e.sup = range_sup(inv, j);
    e.f = inv.norm_map.f[size_t(j)];
    if (e.sup != e.f) report.ai = false;
    report.entries.push_back(e);
  }
  return report;
}

std::vector<std::vector<Rational>> increasing_decomposition(
    const TraceNormMap& f, int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  // Cap scale: the smallest finite value, at least 1.
  Rational scale(1);
  bool have_finite = false;
  for (const auto& fj : f.f)
    if (!fj.infinite) {
      scale = have_finite ? std::min(scale, fj.value) : fj.value;
      have_finite = true;
    }
  if (!have_finite || scale < Rational(1)) scale = Rational(1);

  auto truncation = [&](int k) {
    std::vector<Rational> out;
    Rational cap = Rational(k) * scale;
    for (const auto& fj : f.f)
      out.push_back(fj.infinite ? cap : std::min(fj.value, cap));
    return out;
  };

  std::vector<std::vector<Rational>> gs;
  std::vector<Rational> prev(f.f.size(), Rational(0));
  for (int k = 1; k <= n; ++k) {
    std::vector<Rational> cur = truncation(k);
    std::vector<Rational> g;
    for (size_t j = 0; j < cur.size(); ++j) g.push_back(cur[j] - prev[j]);
    prev = std::move(cur);
    gs.push_back(std::move(g));
  }
  return gs;
}

std::vector<Rational> scale_from_norm_map(const InvariantProfile& inv,
                                          const std::vector<Rational>& candidates) {
  std::vector<Rational> out;
  for (const auto& x : candidates)
    if (range_contains(inv, x)) out.push_back(x);
  return out;
}

}  // namespace ctkit
