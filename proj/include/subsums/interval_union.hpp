#pragma once

#include <span>
#include <vector>

namespace subsums {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
  bool operator==(const Interval&) const = default;
};

/// Sorted union of pairwise disjoint closed intervals. Touching endpoints
/// merge, so consecutive intervals always have strictly positive
/// separation.
class IntervalUnion {
 public:
  IntervalUnion() = default;

  /// [p - left_pad, p + right_pad] around each point of a sorted list,
  /// merged in one sweep.
  static IntervalUnion from_sorted_points(std::span<const double> points, double left_pad,
                                          double right_pad);

  const std::vector<Interval>& intervals() const { return iv_; }
  std::size_t size() const { return iv_.size(); }
  bool empty() const { return iv_.empty(); }

  double total_length() const;
  bool contains_point(double v) const;

  /// Every interval of `other` inside some interval of *this.
  bool contains(const IntervalUnion& other) const;

  /// Maximal open intervals of [lo, hi] disjoint from the union.
  std::vector<Interval> gaps_within(double lo, double hi) const;

  /// Intersection with [lo, hi].
  IntervalUnion clipped(double lo, double hi) const;

 private:
  std::vector<Interval> iv_;
};

}  // namespace subsums
