#pragma once

#include <optional>
#include <vector>

#include "subsums/cover.hpp"
#include "subsums/series.hpp"

namespace subsums {

struct MeasurePoint {
  long long depth = 0;
  double upper_bound = 0.0;
};

/// Certified upper bounds on the Lebesgue measure of the set of subsums,
/// one per depth 1..max_depth. Nonincreasing by cover nesting; the final
/// decrement indicates how far the sequence is from settling.
std::vector<MeasurePoint> measure_estimate(const SeriesSpec& spec, long long max_depth,
                                           EnumerateOptions opts = {});

struct BoxCount {
  long long depth = 0;
  double eps = 0.0;
  long long boxes = 0;
};

struct DimensionEstimate {
  double slope = 0.0;  // least-squares fit of log(count) against log(1/eps)
  std::vector<BoxCount> counts;
};

/// Box-counting estimate: for each depth, eps = tail(depth).hi and the
/// count is the number of eps-grid cells (anchored at 0) meeting the cover.
/// An estimate, never a certificate.
DimensionEstimate box_dimension_estimate(const SeriesSpec& spec,
                                         const std::vector<long long>& depths,
                                         EnumerateOptions opts = {});

enum class ChainTag { LeqChain, GtChain, Neither };

const char* chain_name(ChainTag tag);

/// Per-index outcome of the two displayed inequality chains between three
/// series a, c, b:
///   chain 1 (non-strict): a_n <= c_n <= b_n <= r^a_n <= r^c_n <= r^b_n
///   chain 2 (strict):     r^a_n < r^c_n < r^b_n < a_n < c_n < b_n
/// Comparisons are certified; identical specs compare reflexively equal.
/// No topological conclusion is drawn.
struct SandwichReport {
  long long horizon = 0;
  std::vector<ChainTag> which_chain;         // index n-1 holds the tag for n
  std::vector<long long> chain_holds_at;     // n with a certified chain
  std::optional<long long> chain_fails_at;   // first n where both chains fail
};

SandwichReport sandwich_check(const SeriesSpec& a, const SeriesSpec& c, const SeriesSpec& b,
                              long long horizon);

}  // namespace subsums
