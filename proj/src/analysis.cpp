#include "subsums/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "subsums/errors.hpp"

namespace subsums {

std::vector<MeasurePoint> measure_estimate(const SeriesSpec& spec, long long max_depth,
                                           EnumerateOptions opts) {
  if (max_depth < 1) throw DomainError("measure_estimate needs max_depth >= 1");
  std::vector<MeasurePoint> out;
  out.reserve(static_cast<std::size_t>(max_depth));
  for (long long d = 1; d <= max_depth; ++d) {
    CoverResult c = outer_cover(spec, d, opts);
    out.push_back({d, c.total_length});
  }
  return out;
}

DimensionEstimate box_dimension_estimate(const SeriesSpec& spec,
                                         const std::vector<long long>& depths,
                                         EnumerateOptions opts) {
  if (depths.size() < 3) throw DomainError("box_dimension_estimate needs at least 3 depths");
  DimensionEstimate est;
  for (long long d : depths) {
    CoverResult c = outer_cover(spec, d, opts);
    const double eps = c.tail_hi;
    // grid cells [j*eps, (j+1)*eps) anchored at 0; intervals are sorted and
    // disjoint but neighbours may share a cell, so carry the last index
    long long boxes = 0;
    long long last = -1;
    for (const auto& iv : c.cover.intervals()) {
      long long j0 = static_cast<long long>(std::floor(iv.lo / eps));
      long long j1 = static_cast<long long>(std::floor(iv.hi / eps));
      j0 = std::max(j0, last + 1);
      if (j1 >= j0) {
        boxes += j1 - j0 + 1;
        last = j1;
      }
    }
    est.counts.push_back({d, eps, boxes});
  }
  // least-squares slope of log(count) vs log(1/eps), all points weighted equally
  double eps_min = est.counts.front().eps, eps_max = eps_min;
  for (const auto& c : est.counts) {
    eps_min = std::min(eps_min, c.eps);
    eps_max = std::max(eps_max, c.eps);
  }
  if (eps_min == eps_max) throw DomainError("degenerate fit: the scales eps are not distinct");
  const auto n = static_cast<double>(est.counts.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& c : est.counts) {
    double xi = std::log(1.0 / c.eps);
    double yi = std::log(static_cast<double>(c.boxes));
    sx += xi;
    sy += yi;
    sxx += xi * xi;
    sxy += xi * yi;
  }
  est.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return est;
}

const char* chain_name(ChainTag tag) {
  switch (tag) {
    case ChainTag::LeqChain: return "leq-chain";
    case ChainTag::GtChain: return "gt-chain";
    case ChainTag::Neither: return "neither";
  }
  return "neither";
}

namespace {

// Certified comparison helpers that treat values of the SAME series at the
// same index as reflexively equal (identical specs give identical
// enclosures of one quantity, so <= holds and < fails).
bool leq(const Enclosure& u, const Enclosure& v, bool same_quantity) {
  if (same_quantity) return true;
  return certainly_le(u, v);
}

bool lt(const Enclosure& u, const Enclosure& v, bool same_quantity) {
  if (same_quantity) return false;
  return certainly_lt(u, v);
}

}  // namespace

SandwichReport sandwich_check(const SeriesSpec& a, const SeriesSpec& c, const SeriesSpec& b,
                              long long horizon) {
  if (horizon < 0) throw DomainError("sandwich horizon must be >= 0");
  SandwichReport rep;
  rep.horizon = horizon;
  const bool ac = a == c, cb = c == b;
  for (long long n = 1; n <= horizon; ++n) {
    Enclosure ta = term(a, n), tc = term(c, n), tb = term(b, n);
    Enclosure ra = tail(a, n), rc = tail(c, n), rb = tail(b, n);
    const bool chain1 = leq(ta, tc, ac) && leq(tc, tb, cb) && leq(tb, ra, false) &&
                        leq(ra, rc, ac) && leq(rc, rb, cb);
    const bool chain2 = lt(ra, rc, ac) && lt(rc, rb, cb) && lt(rb, ta, false) &&
                        lt(ta, tc, ac) && lt(tc, tb, cb);
    ChainTag tag = ChainTag::Neither;
    if (chain1) {
      tag = ChainTag::LeqChain;
    } else if (chain2) {
      tag = ChainTag::GtChain;
    }
    rep.which_chain.push_back(tag);
    if (tag != ChainTag::Neither) {
      rep.chain_holds_at.push_back(n);
    } else if (!rep.chain_fails_at) {
      rep.chain_fails_at = n;
    }
  }
  return rep;
}

}  // namespace subsums
