#include "subsums/interval_union.hpp"

#include <algorithm>

#include "subsums/errors.hpp"

namespace subsums {

IntervalUnion IntervalUnion::from_sorted_points(std::span<const double> points, double left_pad,
                                                double right_pad) {
  if (left_pad < 0.0 || right_pad < 0.0) throw DomainError("interval pads must be nonnegative");
  IntervalUnion u;
  u.iv_.reserve(points.size());
  for (double p : points) {
    double lo = p - left_pad;
    double hi = p + right_pad;
    if (!u.iv_.empty() && lo <= u.iv_.back().hi) {
      u.iv_.back().hi = std::max(u.iv_.back().hi, hi);
    } else {
      u.iv_.push_back({lo, hi});
    }
  }
  return u;
}

double IntervalUnion::total_length() const {
  double s = 0.0;
  for (const auto& i : iv_) s += i.length();
  return s;
}

bool IntervalUnion::contains_point(double v) const {
  auto it = std::upper_bound(iv_.begin(), iv_.end(), v,
                             [](double x, const Interval& i) { return x < i.lo; });
  if (it == iv_.begin()) return false;
  --it;
  return v <= it->hi;
}

bool IntervalUnion::contains(const IntervalUnion& other) const {
  std::size_t j = 0;
  for (const auto& o : other.iv_) {
    while (j < iv_.size() && iv_[j].hi < o.lo) ++j;
    if (j == iv_.size() || !(iv_[j].lo <= o.lo && o.hi <= iv_[j].hi)) return false;
  }
  return true;
}

std::vector<Interval> IntervalUnion::gaps_within(double lo, double hi) const {
  std::vector<Interval> gaps;
  double cursor = lo;
  for (const auto& i : iv_) {
    if (i.hi < lo) continue;
    if (i.lo > hi) break;
    if (i.lo > cursor) gaps.push_back({cursor, std::min(i.lo, hi)});
    cursor = std::max(cursor, i.hi);
    if (cursor >= hi) return gaps;
  }
  if (cursor < hi) gaps.push_back({cursor, hi});
  return gaps;
}

IntervalUnion IntervalUnion::clipped(double lo, double hi) const {
  IntervalUnion u;
  for (const auto& i : iv_) {
    if (i.hi < lo || i.lo > hi) continue;
    u.iv_.push_back({std::max(i.lo, lo), std::min(i.hi, hi)});
  }
  return u;
}

}  // namespace subsums
