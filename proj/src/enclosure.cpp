#include "subsums/enclosure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "subsums/errors.hpp"

namespace subsums {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Exponent floor used by the representability guard. Values certified
// above 2^-1000 keep ~70 bits of headroom before subnormals, where the
// ulp-based slack model would stop being a sound stand-in for directed
// rounding.
constexpr double kMinNormalish = 9.332636185032189e-302;  // 2^-1000

}  // namespace

Enclosure Enclosure::of(double lo, double hi) {
  if (!(lo <= hi)) throw DomainError("enclosure with lo > hi");
  return {lo, hi};
}

double step_down(double v, int ulps) {
  for (int i = 0; i < ulps; ++i) v = std::nextafter(v, -kInf);
  return v;
}

double step_up(double v, int ulps) {
  for (int i = 0; i < ulps; ++i) v = std::nextafter(v, kInf);
  return v;
}

Enclosure operator+(Enclosure a, Enclosure b) {
  return {step_down(a.lo + b.lo), step_up(a.hi + b.hi)};
}

Enclosure operator-(Enclosure a, Enclosure b) {
  return {step_down(a.lo - b.hi), step_up(a.hi - b.lo)};
}

Enclosure operator*(Enclosure a, Enclosure b) {
  double c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  double lo = *std::min_element(c, c + 4);
  double hi = *std::max_element(c, c + 4);
  return {step_down(lo), step_up(hi)};
}

Enclosure div_pos(Enclosure a, Enclosure b) {
  if (!(b.lo > 0.0)) throw DomainError("div_pos requires a strictly positive denominator");
  double lo = a.lo >= 0.0 ? a.lo / b.hi : a.lo / b.lo;
  double hi = a.hi >= 0.0 ? a.hi / b.lo : a.hi / b.hi;
  return {step_down(lo), step_up(hi)};
}

Enclosure scale(Enclosure a, long long k) {
  if (k < 0) throw DomainError("scale expects a nonnegative factor");
  double f = static_cast<double>(k);
  return {step_down(a.lo * f), step_up(a.hi * f)};
}

namespace {

// Directed b^e through extended precision. Repeated interval squaring
// would compound its slack by the power's condition number (relative width
// ~ e * 2^-50 near the exponent guard, past the 1e-12 budget), so the
// endpoint is computed as exp2l(e * log2l(b)) instead and pushed outward by
// a margin that dominates the libm error: log2l and exp2l are good to a
// couple of 2^-64 units, so the relative error is below
// ~2 * e*|log2 b| * 2^-63 + 2^-62 < 1e-16 for e*|log2 b| <= 1000, while
// the margin grows as 3.5e-18 per unit of e*|log2 b| on top of 1e-15.
double pow_directed(double b, long long e, bool up) {
  const long double lx = log2l(static_cast<long double>(b));  // negative
  const long double ex = static_cast<long double>(e) * lx;
  const long double y = exp2l(ex);
  const long double mu = 1e-15L + (-ex) * 3.5e-18L;
  const long double adj = up ? y * (1.0L + mu) : y * (1.0L - mu);
  const double d = static_cast<double>(adj);
  return up ? std::nextafter(d, kInf) : std::nextafter(d, -kInf);
}

}  // namespace

Enclosure pow_int(Enclosure base, long long e) {
  if (!(base.lo > 0.0 && base.hi < 1.0)) throw DomainError("pow_int base must lie in (0,1)");
  if (e < 1) throw DomainError("pow_int exponent must be >= 1");
  if (e == 1) return base;
  if (static_cast<double>(e) * std::log2(base.hi) < -1000.0) {
    throw GuardError("index overflow: power of the ratio leaves the representable range");
  }
  double lo = pow_directed(base.lo, e, false);
  double hi = pow_directed(base.hi, e, true);
  if (hi < kMinNormalish) {
    throw GuardError("index overflow: power of the ratio leaves the representable range");
  }
  return {std::max(lo, 0.0), hi};
}

Enclosure from_rational(const Rational& r) {
  long long num = r.num(), den = r.den();
  double dn = static_cast<double>(num);
  double dd = static_cast<double>(den);
  constexpr double kExact = 9007199254740992.0;  // 2^53
  if (std::fabs(dn) <= kExact && dd <= kExact) {
    double v = dn / dd;
    // correctly rounded quotient; the fma residual v*den - num tells which
    // side of v the true value falls on, so one ulp of slack suffices
    double r = std::fma(v, dd, -dn);
    if (r == 0.0) return {v, v};
    if (r > 0.0) return {std::nextafter(v, -kInf), v};
    return {v, std::nextafter(v, kInf)};
  }
  long double vl = static_cast<long double>(num) / static_cast<long double>(den);
  double v = static_cast<double>(vl);
  return {step_down(std::nextafter(v, -kInf), 1), step_up(std::nextafter(v, kInf), 1)};
}

Enclosure pi_enclosure() {
  return {std::nextafter(M_PI, -kInf), std::nextafter(M_PI, kInf)};
}

Enclosure jordan_bounds(double x) {
  return jordan_bounds(Enclosure::point(x));
}

Enclosure jordan_bounds(Enclosure x) {
  if (!(x.lo > 0.0 && x.hi < M_PI_2)) {
    throw DomainError("jordan_bounds requires 0 < x < pi/2");
  }
  double lo = step_down((2.0 * x.lo) / pi_enclosure().hi);
  return {lo, x.hi};
}

Enclosure sin_enclosure(Enclosure y) {
  if (!(y.lo > 0.0 && y.hi < M_PI_2)) {
    throw DomainError("sin_enclosure argument must lie in (0, pi/2)");
  }
  // sin is increasing there
  Enclosure lib{step_down(std::sin(y.lo)), step_up(std::sin(y.hi))};
  Enclosure jor = jordan_bounds(y);
  double lo = std::max(lib.lo, jor.lo);
  double hi = std::min(lib.hi, jor.hi);
  if (!(lo <= hi)) throw std::logic_error("empty sine enclosure intersection");
  return {lo, hi};
}

Enclosure intersect(Enclosure a, Enclosure b) {
  double lo = std::max(a.lo, b.lo);
  double hi = std::min(a.hi, b.hi);
  if (!(lo <= hi)) throw DomainError("intersection of disjoint enclosures");
  return {lo, hi};
}

std::string to_string(Enclosure e) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", e.lo, e.hi);
  return buf;
}

}  // namespace subsums
