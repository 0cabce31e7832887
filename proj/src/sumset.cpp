#include "subsums/sumset.hpp"

#include <algorithm>
#include <string>

#include "subsums/errors.hpp"

namespace subsums {

namespace {

void check_positive(const std::vector<long long>& k) {
  if (k.empty()) throw DomainError("weight vector must not be empty");
  for (long long v : k) {
    if (v < 1) throw DomainError("weights must be positive integers");
  }
}

// Longest run of consecutive positive integers in a sorted distinct list;
// smallest start wins ties. Falls back to (first positive element, 0).
void longest_run(const std::vector<long long>& sigma, long long& n0, long long& n_star) {
  long long best_start = 0, best_len = 0;
  long long run_start = 0, run_len = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] < 1) continue;
    if (run_len > 0 && sigma[i] == sigma[i - 1] + 1) {
      ++run_len;
    } else {
      run_start = sigma[i];
      run_len = 1;
    }
    if (run_len > best_len) {
      best_len = run_len;
      best_start = run_start;
    }
  }
  n0 = best_start;
  n_star = best_len - 1;
}

SumsetInfo finish(std::vector<long long> sigma) {
  std::sort(sigma.begin(), sigma.end());
  sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());
  SumsetInfo info;
  info.card_sigma = static_cast<long long>(sigma.size());
  longest_run(sigma, info.n0, info.n_star);
  info.sigma = std::move(sigma);
  return info;
}

}  // namespace

SumsetInfo sumset(const std::vector<long long>& k) {
  check_positive(k);
  if (k.size() > 24) {
    throw GuardError("sumset: m > 24; use the meet-in-the-middle variant (--mitm)");
  }
  std::vector<long long> sums{0};
  for (long long w : k) {
    const std::size_t n = sums.size();
    sums.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) sums.push_back(sums[i] + w);
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  }
  return finish(std::move(sums));
}

SumsetInfo sumset_meet_in_middle(const std::vector<long long>& k) {
  check_positive(k);
  if (k.size() > 48) throw GuardError("sumset: m > 48 is not supported");
  const std::size_t half = k.size() / 2;
  std::vector<long long> a{0}, b{0};
  auto grow = [](std::vector<long long>& sums, long long w) {
    const std::size_t n = sums.size();
    for (std::size_t i = 0; i < n; ++i) sums.push_back(sums[i] + w);
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  };
  for (std::size_t i = 0; i < half; ++i) grow(a, k[i]);
  for (std::size_t i = half; i < k.size(); ++i) grow(b, k[i]);
  if (a.size() * b.size() > 100'000'000ULL) {
    throw GuardError("sumset: combined half-set product exceeds 1e8 values");
  }
  std::vector<long long> sums;
  sums.reserve(a.size() * b.size());
  for (long long va : a) {
    for (long long vb : b) sums.push_back(va + vb);
  }
  return finish(std::move(sums));
}

}  // namespace subsums
