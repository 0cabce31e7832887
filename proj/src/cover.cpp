#include "subsums/cover.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "subsums/errors.hpp"
#include "subsums/sumset.hpp"

namespace subsums {

namespace {

constexpr long long kNaiveDepthMax = 30;
constexpr std::size_t kPointGuard = 100'000'000;

double ulp_of(double v) {
  return std::nextafter(std::fabs(v), std::numeric_limits<double>::infinity()) - std::fabs(v);
}

// Canonical block factor midpoints/halfwidths for enumeration. Kept local:
// enumeration works on midpoints, certification lives in the err budget.
struct LevelValues {
  std::vector<double> values;  // ascending, first is 0
  double halfwidth = 0.0;      // bound on |value - true contribution|
};

LevelValues block_level(const SeriesSpec& spec, long long block, std::size_t jcount) {
  // subset sums of the first jcount weights, scaled by the block factor
  std::vector<long long> prefix(spec.weights().begin(),
                                spec.weights().begin() + static_cast<std::ptrdiff_t>(jcount));
  SumsetInfo sums = sumset(prefix);
  Enclosure p = pow_int(spec.ratio(), block + 1);
  Enclosure f = spec.kind() == SeriesKind::Sine ? sin_enclosure(p) : p;
  LevelValues lv;
  lv.values.reserve(sums.sigma.size());
  double fm = f.mid();
  for (long long s : sums.sigma) lv.values.push_back(static_cast<double>(s) * fm);
  // |sigma*mid - sigma*true| <= sigma*halfwidth, plus one rounding of the product
  double smax = static_cast<double>(sums.sigma.back());
  lv.halfwidth = smax * f.halfwidth() + 2.0 * ulp_of(smax * f.hi);
  return lv;
}

LevelValues term_level(const SeriesSpec& spec, long long n) {
  Enclosure a = term(spec, n);
  LevelValues lv;
  lv.values = {0.0, a.mid()};
  lv.halfwidth = a.halfwidth() + 2.0 * ulp_of(a.hi);
  return lv;
}

// One convolution level: merged = dedup({s + v : s in sorted, v in level}).
// Multiway merge over |level| shifted copies of the sorted input with
// anchored-first dedup, so a kept representative is within tol of every
// value it absorbed.
std::vector<double> convolve_level(const std::vector<double>& sorted,
                                   const std::vector<double>& level, double tol) {
  if (sorted.size() * level.size() > kPointGuard) {
    throw GuardError(
        "enumeration exceeds 1e8 points; raise the dedup tolerance (tol_scale) or lower the "
        "depth");
  }
  struct Cur {
    double val;
    std::size_t si;
    std::size_t vi;
  };
  auto cmp = [](const Cur& a, const Cur& b) { return a.val > b.val; };
  std::priority_queue<Cur, std::vector<Cur>, decltype(cmp)> heap(cmp);
  for (std::size_t vi = 0; vi < level.size(); ++vi) {
    heap.push({sorted[0] + level[vi], 0, vi});
  }
  std::vector<double> out;
  out.reserve(sorted.size() + level.size());
  bool first = true;
  double anchor = 0.0;
  while (!heap.empty()) {
    Cur c = heap.top();
    heap.pop();
    if (first || c.val - anchor > tol) {
      out.push_back(c.val);
      anchor = c.val;
      first = false;
    }
    if (c.si + 1 < sorted.size()) {
      heap.push({sorted[c.si + 1] + level[c.vi], c.si + 1, c.vi});
    }
  }
  return out;
}

double dedup_tolerance(double span, double tol_scale) {
  return std::ldexp(span, -46) * tol_scale;
}

}  // namespace

PointSet enumerate_sums(const SeriesSpec& spec, long long depth, EnumerateOptions opts) {
  if (depth < 0) throw DomainError("depth must be >= 0");
  if (opts.tol_scale < 1.0) throw DomainError("tol_scale must be >= 1");
  const double span = tail(spec, 0).hi;
  PointSet ps;
  ps.tol = dedup_tolerance(span, opts.tol_scale);
  ps.values = {0.0};
  if (depth == 0) return ps;
  if (depth > max_safe_index(spec)) {
    throw GuardError("depth exceeds the representable index range for this series");
  }
  const double level_slack = 2.0 * ulp_of(span);

  const bool blockwise = !opts.force_naive && spec.kind() != SeriesKind::ExplicitPrefix;
  if (blockwise) {
    const long long m = static_cast<long long>(spec.block_size());
    const long long full = depth / m;
    const long long rem = depth % m;
    for (long long b = 0; b < full; ++b) {
      LevelValues lv = block_level(spec, b, spec.block_size());
      ps.values = convolve_level(ps.values, lv.values, ps.tol);
      ps.err += lv.halfwidth + ps.tol + level_slack;
    }
    if (rem > 0) {
      LevelValues lv = block_level(spec, full, static_cast<std::size_t>(rem));
      ps.values = convolve_level(ps.values, lv.values, ps.tol);
      ps.err += lv.halfwidth + ps.tol + level_slack;
    }
  } else {
    if (depth > kNaiveDepthMax) {
      throw GuardError("naive enumeration is limited to depth 30; use the blockwise path");
    }
    for (long long n = 1; n <= depth; ++n) {
      LevelValues lv = term_level(spec, n);
      ps.values = convolve_level(ps.values, lv.values, ps.tol);
      ps.err += lv.halfwidth + ps.tol + level_slack;
    }
  }
  return ps;
}

namespace {

// Pad schedule for the cover inflation. gamma bounds the per-level
// enumeration drift (dedup shift + addition rounding + midpoint halfwidth),
// so the drift at depth d is at most gamma*d. The quadratic profile
//   pad(d) = base + 2*gamma*(D^2 - d^2)
// drops by 2*gamma*(2d+1) per step, twice the worst combined drift of the
// two depths involved, which makes consecutive covers nest as computed
// sets while the pad itself stays far below the tails that set the
// interval widths.
struct PadSchedule {
  double gamma = 0.0;
  double emax = 0.0;
  double base = 0.0;

  double pad(long long depth) const {
    const double d = static_cast<double>(depth);
    const double dmax = static_cast<double>(kCoverDepthMax);
    return base + 2.0 * gamma * (dmax * dmax - d * d);
  }
};

PadSchedule make_schedule(const SeriesSpec& spec, double tol, double span) {
  double hw_level = 0.0;  // largest one-level midpoint halfwidth
  if (spec.kind() == SeriesKind::ExplicitPrefix) {
    const long long len = static_cast<long long>(spec.prefix().size());
    for (long long n = 1; n <= std::min<long long>(len, kCoverDepthMax); ++n) {
      Enclosure a = term(spec, n);
      hw_level = std::max(hw_level, a.halfwidth() + 2.0 * ulp_of(a.hi));
    }
  } else {
    const long long m = static_cast<long long>(spec.block_size());
    const long long blocks = kCoverDepthMax / m + 1;
    const double K = static_cast<double>(spec.weight_sum());
    for (long long b = 0; b <= blocks; ++b) {
      double lg = static_cast<double>(b + 1) * std::log2(spec.ratio().hi);
      if (lg < -900.0) break;
      Enclosure p = pow_int(spec.ratio(), b + 1);
      Enclosure f = spec.kind() == SeriesKind::Sine ? sin_enclosure(p) : p;
      hw_level = std::max(hw_level, K * f.halfwidth() + 2.0 * ulp_of(K * f.hi));
    }
  }
  PadSchedule s;
  s.gamma = tol + 4.0 * ulp_of(span) + hw_level;
  s.emax = static_cast<double>(kCoverDepthMax) * s.gamma;
  s.base = s.emax + 4.0 * tail(spec, 0).halfwidth() + 16.0 * ulp_of(span);
  return s;
}

}  // namespace

CoverResult outer_cover(const SeriesSpec& spec, long long depth, EnumerateOptions opts) {
  if (depth < 0) throw DomainError("depth must be >= 0");
  if (depth > kCoverDepthMax) {
    throw GuardError("outer_cover depth is limited to " + std::to_string(kCoverDepthMax));
  }
  PointSet ps = enumerate_sums(spec, depth, opts);
  const double span = tail(spec, 0).hi;
  const double tail_hi = tail(spec, depth).hi;

  const PadSchedule sched = make_schedule(spec, ps.tol, span);
  const double pad = sched.pad(depth);
  if (!(ps.err <= sched.emax)) {
    throw std::logic_error("enumeration drift exceeded its certified bound");
  }

  CoverResult r;
  r.depth = depth;
  r.point_count = static_cast<long long>(ps.values.size());
  r.tail_hi = tail_hi;
  r.pad = pad;
  r.span = span;
  r.cover = IntervalUnion::from_sorted_points(ps.values, pad, tail_hi + pad).clipped(0.0, span);
  r.gaps = r.cover.gaps_within(0.0, span);
  r.total_length = r.cover.total_length();
  return r;
}

std::vector<Interval> gaps_of(const CoverResult& cover) {
  return cover.cover.gaps_within(0.0, cover.span);
}

}  // namespace subsums
