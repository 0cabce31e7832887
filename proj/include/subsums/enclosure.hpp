#pragma once

#include <string>

#include "subsums/rational.hpp"

namespace subsums {

/// Certified bracket [lo, hi] of a real quantity. Every arithmetic
/// operation widens the result outward by a few units in the last place,
/// standing in for directed rounding, so brackets stay valid without
/// touching the FPU rounding mode. Comparisons certify only when the
/// brackets are disjoint; overlapping brackets are indeterminate.
struct Enclosure {
  double lo = 0.0;
  double hi = 0.0;

  static Enclosure point(double v) { return {v, v}; }
  static Enclosure of(double lo, double hi);

  double mid() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
  double halfwidth() const { return 0.5 * (hi - lo); }
  bool contains(double v) const { return lo <= v && v <= hi; }

  bool operator==(const Enclosure&) const = default;
};

// Outward-rounding step: k units in the last place toward -inf / +inf.
double step_down(double v, int ulps = 4);
double step_up(double v, int ulps = 4);

Enclosure operator+(Enclosure a, Enclosure b);
Enclosure operator-(Enclosure a, Enclosure b);
Enclosure operator*(Enclosure a, Enclosure b);

/// Quotient a / b for a strictly positive denominator (b.lo > 0).
Enclosure div_pos(Enclosure a, Enclosure b);

/// Multiplication by an exact nonnegative integer.
Enclosure scale(Enclosure a, long long k);

/// base^e for base inside (0, 1), e >= 1, by directed square-and-multiply.
/// Throws GuardError once the exponent leaves the representable range
/// (value below ~2^-1000) rather than underflowing to a wrong bracket.
Enclosure pow_int(Enclosure base, long long e);

/// Tightest double bracket of an exact rational.
Enclosure from_rational(const Rational& r);

/// pi as a 2-ulp-wide bracket around the nearest double.
Enclosure pi_enclosure();

/// The bracket [2x/pi, x] of sin x, valid on (0, pi/2).
Enclosure jordan_bounds(double x);
Enclosure jordan_bounds(Enclosure x);

/// Enclosure of sin over y, for y inside (0, pi/2): library sine widened
/// by 4 ulp, intersected with the Jordan bracket.
Enclosure sin_enclosure(Enclosure y);

// Certified order relations: true only when the whole brackets satisfy them.
inline bool certainly_le(Enclosure a, Enclosure b) { return a.hi <= b.lo; }
inline bool certainly_lt(Enclosure a, Enclosure b) { return a.hi < b.lo; }
inline bool certainly_ge(Enclosure a, Enclosure b) { return a.lo >= b.hi; }
inline bool certainly_gt(Enclosure a, Enclosure b) { return a.lo > b.hi; }
inline bool overlaps(Enclosure a, Enclosure b) { return a.lo <= b.hi && b.lo <= a.hi; }

/// Intersection of two brackets of the same quantity; throws on empty.
Enclosure intersect(Enclosure a, Enclosure b);

std::string to_string(Enclosure e);

}  // namespace subsums
