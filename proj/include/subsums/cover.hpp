#pragma once

#include <vector>

#include "subsums/interval_union.hpp"
#include "subsums/series.hpp"

namespace subsums {

/// Depth-limited enumeration of partial subsums. Values are enclosure
/// midpoints; `err` certifies both directions: every stored value is within
/// err of a true partial sum and every true partial sum is within err of a
/// stored value.
struct PointSet {
  std::vector<double> values;  // sorted, consecutive values > tol apart
  double err = 0.0;
  double tol = 0.0;  // dedup tolerance used
};

struct EnumerateOptions {
  double tol_scale = 1.0;   // multiplies the default 2^-46 * span tolerance
  bool force_naive = false; // skip the blockwise path (oracle comparisons)
};

/// All distinct values of sum_{n<=depth} eps_n * u_n, deduplicated within
/// the tolerance. The blockwise path convolves per-block subset-sum value
/// sets level by level; the naive path extends one term at a time.
PointSet enumerate_sums(const SeriesSpec& spec, long long depth, EnumerateOptions opts = {});

/// Finite-depth outer cover: the union of [s, s + tail(depth).hi] over all
/// enumerated prefix sums s, padded so that covers at successive depths
/// nest, clipped to [0, tail(0).hi]. Always a certified superset of the
/// set of subsums; the intersection over all depths is exactly that set.
struct CoverResult {
  long long depth = 0;
  IntervalUnion cover;
  long long point_count = 0;
  double tail_hi = 0.0;  // interval half-width seed
  double pad = 0.0;      // extra inflation applied to every interval
  double span = 0.0;     // right end of the ambient bracket [0, tail(0).hi]
  std::vector<Interval> gaps;
  double total_length = 0.0;
};

CoverResult outer_cover(const SeriesSpec& spec, long long depth, EnumerateOptions opts = {});

/// Maximal open intervals of [0, span] certified disjoint from the set of
/// subsums (true gaps: the cover is a superset).
std::vector<Interval> gaps_of(const CoverResult& cover);

/// Depth guard for outer covers. The pad schedule below pays for every
/// depth up to this bound, so raising it loosens all covers.
inline constexpr long long kCoverDepthMax = 32;

}  // namespace subsums
