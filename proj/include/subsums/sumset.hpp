#pragma once

#include <vector>

namespace subsums {

/// All subset sums of a weight vector, with the longest run of consecutive
/// positive integers contained in it.
struct SumsetInfo {
  std::vector<long long> sigma;  // sorted, distinct, contains 0 and K
  long long card_sigma = 0;
  long long n0 = 0;      // start of the longest consecutive run (>= 1)
  long long n_star = 0;  // run length - 1
};

/// Exact sumset by enumeration with deduplication; m <= 24.
SumsetInfo sumset(const std::vector<long long>& k);

/// Meet-in-the-middle variant for larger m: enumerates both halves and
/// combines them. Guarded by the product of the half-set sizes instead of m.
SumsetInfo sumset_meet_in_middle(const std::vector<long long>& k);

}  // namespace subsums
