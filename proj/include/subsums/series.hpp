#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subsums/enclosure.hpp"
#include "subsums/rational.hpp"

namespace subsums {

enum class SeriesKind { Sine, Multigeometric, ExplicitPrefix };

/// Symbolic description of a positive series.
///
/// Sine:            a_{im+j} = k_j * sin(x^{i+1}),  i >= 0, 1 <= j <= m
/// Multigeometric:  v_{im+j} = k_j * q^{i+1}
/// ExplicitPrefix:  a finite list of exact rational terms; everything past
///                  the prefix is only known to be bounded by a geometric
///                  envelope last_term * rho^p.
///
/// The constructor checks positivity and the open-interval ratio range; it
/// deliberately does NOT require the weights to be sorted — classifiers do.
class SeriesSpec {
 public:
  static SeriesSpec sine(std::vector<long long> weights, const Rational& x);
  static SeriesSpec sine(std::vector<long long> weights, Enclosure x);
  static SeriesSpec multigeometric(std::vector<long long> weights, const Rational& q);
  static SeriesSpec multigeometric(std::vector<long long> weights, Enclosure q);
  static SeriesSpec explicit_prefix(std::vector<Rational> terms, const Rational& rho);

  /// Text form used by the CLI and config files:
  ///   "sine k=8,7,6,5,4 x=1/15"   |   "mgs k=3,2 q=1/4"
  static SeriesSpec parse(std::string_view text);

  SeriesKind kind() const { return kind_; }
  const std::vector<long long>& weights() const { return weights_; }
  std::size_t block_size() const { return weights_.size(); }  // m
  long long weight_sum() const { return weight_sum_; }        // K
  Enclosure ratio() const { return ratio_; }                  // x or q
  const std::optional<Rational>& ratio_exact() const { return ratio_exact_; }
  const std::vector<Rational>& prefix() const { return prefix_; }
  const Rational& prefix_ratio() const { return prefix_rho_; }

  bool weights_sorted_nonincreasing() const;
  std::string str() const;

  bool operator==(const SeriesSpec& o) const;

 private:
  SeriesSpec() = default;

  SeriesKind kind_ = SeriesKind::Sine;
  std::vector<long long> weights_;
  long long weight_sum_ = 0;
  Enclosure ratio_;
  std::optional<Rational> ratio_exact_;
  std::vector<Rational> prefix_;
  Rational prefix_rho_;
};

/// Certified bracket of the n-th term, n >= 1.
Enclosure term(const SeriesSpec& spec, long long n);

/// Certified bracket of the tail r_n = sum of terms past n, n >= 0
/// (n = 0 is the total sum). Brackets telescope: tail(n) always encloses
/// term(n+1) + tail(n+1) endpoint-by-endpoint, so outer covers nest.
Enclosure tail(const SeriesSpec& spec, long long n);

/// Number of full blocks the tail engine evaluates exactly before cutting
/// over to the geometric remainder bound. Constant per spec.
int tail_horizon_blocks(const SeriesSpec& spec);

/// Largest index n for which term(n) and tail(n) are computable before the
/// representability guard trips; prefix length for ExplicitPrefix.
long long max_safe_index(const SeriesSpec& spec);

}  // namespace subsums
