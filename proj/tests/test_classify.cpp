#include <doctest.h>

#include <cmath>
#include <random>

#include "subsums/classify.hpp"
#include "subsums/errors.hpp"

using namespace subsums;

namespace {

const SeriesSpec kGn = SeriesSpec::multigeometric({3, 2}, Rational(1, 4));
const SeriesSpec kEx1 = SeriesSpec::sine({2, 1}, Rational(1, 2));
const SeriesSpec kEx2 = SeriesSpec::sine({8, 7, 6, 5, 4}, Rational(1, 15));
const SeriesSpec kEx3 = SeriesSpec::sine({4, 1}, Rational(1, 10));

// Reference thresholds recomputed from the defining formulas in long double.
struct RefThresholds {
  long double d, l, t_interval, t_nfu, t_cantor;
};

RefThresholds reference(const std::vector<long long>& k) {
  const long double pi = 3.14159265358979323846L;
  long double K = 0;
  for (long long v : k) K += static_cast<long double>(v);
  long double d = -1e30L, l = 1e30L;
  long double suffix = 0;
  for (std::size_t j = k.size(); j-- > 0;) {
    long double kj = static_cast<long double>(k[j]);
    d = std::max(d, pi / 2 * kj - suffix);
    l = std::min(l, 2 / pi * kj - suffix);
    suffix += kj;
  }
  long double km = static_cast<long double>(k.back());
  return {d, l, d / (K + d), 2 * km / (K * pi + 2 * km), l / (K + l)};
}

std::vector<long long> random_sorted_weights(std::mt19937_64& rng, std::size_t max_m = 8) {
  std::size_t m = 1 + rng() % max_m;
  std::vector<long long> k(m);
  for (auto& v : k) v = 1 + static_cast<long long>(rng() % 50);
  std::sort(k.rbegin(), k.rend());
  return k;
}

}  // namespace

TEST_CASE("thresholds match the defining formulas") {
  ThresholdReport t = thresholds_sine(kEx1);
  RefThresholds ref = reference({2, 1});
  // d_1 = pi - 1, d_2 = pi/2
  CHECK(t.d_list.size() == 2);
  CHECK(t.d_list[0].contains(2.1415926535897932));
  CHECK(t.d_list[1].contains(1.5707963267948966));
  CHECK(static_cast<long double>(t.d.lo) <= ref.d);
  CHECK(ref.d <= static_cast<long double>(t.d.hi));
  CHECK(static_cast<long double>(t.t_interval.lo) <= ref.t_interval);
  CHECK(ref.t_interval <= static_cast<long double>(t.t_interval.hi));
  CHECK(t.t_interval.contains(0.41652320552748593));  // (pi-1)/(pi+2)
  CHECK(t.t_not_finite_union.contains(0.17505810676300565));  // 2/(3pi+2)
  REQUIRE(t.t_contains_interval.has_value());
  CHECK(t.t_contains_interval->contains(0.43990084648844262));  // pi/(4+pi), n* = 2
  CHECK(t.sums->n0 == 1);
  CHECK(t.sums->n_star == 2);

  // Example 3: l = 2/pi, threshold (2/pi)/(5+2/pi)
  ThresholdReport t3 = thresholds_sine(kEx3);
  CHECK(t3.l.contains(0.63661977236758134));
  CHECK(t3.t_cantor.contains(0.11294353674315313));
}

TEST_CASE("worked example: k=(2,1), x=1/2 is an interval") {
  Classification c = classify_sine(kEx1);
  CHECK(c.label == Label::Interval);
  REQUIRE(c.certificates.size() == 1);
  CHECK(c.certificates[0].theorem == "sine-interval-threshold");
  CHECK(c.certificates[0].rhs.contains(0.41652320552748593));
  CHECK(c.certificates[0].lhs.contains(0.5));
}

TEST_CASE("worked example: k=(8,7,6,5,4), x=1/15 is a Cantorval") {
  Classification c = classify_sine(kEx2);
  CHECK(c.label == Label::Cantorval);
  REQUIRE(c.certificates.size() == 2);
  CHECK(c.certificates[0].rhs.contains(0.066641631662195519));  // pi/(44+pi)
  CHECK(c.certificates[1].rhs.contains(0.078241307837632762));  // 8/(30pi+8)
  // both comparisons are certified with margin > 1e-5
  CHECK(c.certificates[0].lhs.lo - c.certificates[0].rhs.hi > 1e-5);
  CHECK(c.certificates[1].rhs.lo - c.certificates[1].lhs.hi > 1e-5);
  CHECK(c.notes.find("indeterminate") == std::string::npos);
}

TEST_CASE("worked example: k=(4,1), x=1/10 is a Cantor-type set") {
  Classification c = classify_sine(kEx3);
  CHECK(c.label == Label::CantorSet);
  REQUIRE(!c.certificates.empty());
  CHECK(c.certificates[0].theorem == "sine-cantor-threshold");
  CHECK(c.certificates[0].rhs.contains(0.11294353674315313));
}

TEST_CASE("classify_sine rejects unsorted weights and wrong kinds") {
  CHECK_THROWS_AS(classify_sine(SeriesSpec::sine({1, 5}, Rational(1, 2))), DomainError);
  CHECK_THROWS_AS(classify_sine(kGn), DomainError);
  CHECK_THROWS_AS(classify_multigeometric(kEx1), DomainError);
}

TEST_CASE("multigeometric classification examples") {
  // GN parameters: q = 1/4 < k_m/(K+k_m) = 2/7, and 1/(n*+1) = 1/2 > q
  Classification c = classify_multigeometric(kGn);
  CHECK(c.label == Label::NotFiniteUnion);
  REQUIRE(!c.certificates.empty());
  CHECK(c.certificates[0].rhs.contains(2.0 / 7.0));

  // q = 1/10 < 1/card(Sigma) = 1/4
  c = classify_multigeometric(SeriesSpec::multigeometric({3, 2}, Rational(1, 10)));
  CHECK(c.label == Label::CantorSet);
  CHECK(c.certificates[0].rhs.lo == 0.25);

  // dyadic case: no criterion applies
  c = classify_multigeometric(SeriesSpec::multigeometric({1}, Rational(1, 2)));
  CHECK(c.label == Label::Unknown);
  CHECK(c.notes.find("term-vs-tail scan") != std::string::npos);
  CHECK(c.notes.find("0 gt") != std::string::npos);  // all comparisons are Leq
}

TEST_CASE("boundary q = k_m/(K+k_m) is not strictly below the threshold") {
  // strict inequality as printed: q = 2/7 exactly must NOT certify
  Classification c = classify_multigeometric(SeriesSpec::multigeometric({3, 2}, Rational(2, 7)));
  CHECK(c.label != Label::NotFiniteUnion);
  CHECK(c.label != Label::Cantorval);
}

TEST_CASE("family classifier window") {
  // a=9, d=1, n=4: window [1/10, min{1/9, 8/74}) = [0.1, 0.108108...)
  Classification c = classify_ferdinands_family(9, 1, 4, Rational(1, 10));
  CHECK(c.label == Label::Cantorval);
  REQUIRE(c.certificates.size() == 2);
  CHECK(c.certificates[1].rhs.contains(8.0 / 74.0));
  CHECK(c.notes.find("(17,15,13,11,9,1)") != std::string::npos);

  c = classify_ferdinands_family(9, 1, 4, Rational(1, 8));
  CHECK(c.label == Label::Unknown);
  CHECK(c.notes.find("q at or above the window") != std::string::npos);

  // the enclosure overload certifies strictly inside the window
  c = classify_ferdinands_family(9, 1, 4, Enclosure::point(0.105));
  CHECK(c.label == Label::Cantorval);
  // and stays honest on the (irrational-side) boundary
  c = classify_ferdinands_family(9, 1, 4, from_rational(Rational(1, 10)));
  CHECK(c.label == Label::Unknown);
  CHECK(c.notes.find("indeterminate") != std::string::npos);

  CHECK_THROWS_WITH_AS(classify_ferdinands_family(8, 1, 4, from_rational(Rational(1, 10))),
                       doctest::Contains("2*n*d < a"), DomainError);
  CHECK_THROWS_AS(classify_ferdinands_family(9, 1, 3, from_rational(Rational(1, 10))),
                  DomainError);
}

TEST_CASE("kakeya comparisons on the GN series") {
  CHECK(kakeya_compare(kGn, 1) == KakeyaOutcome::TermLeqTail);  // 3/4 <= 11/12
  CHECK(kakeya_compare(kGn, 2) == KakeyaOutcome::TermGtTail);   // 1/2 > 5/12
  KakeyaScanSummary s = kakeya_scan(kGn, 20);
  CHECK(s.horizon == 20);
  CHECK(s.leq_count == 10);
  CHECK(s.gt_count == 10);
  CHECK(s.indeterminate_count == 0);
  for (long long n = 1; n <= 20; ++n) {
    CHECK(s.outcomes[static_cast<std::size_t>(n - 1)] ==
          (n % 2 == 1 ? KakeyaOutcome::TermLeqTail : KakeyaOutcome::TermGtTail));
  }
  CHECK(s.pattern == KakeyaPattern::PeriodicMixed);
  CHECK(s.gt_residues == std::vector<int>{0});
}

TEST_CASE("kakeya scans on the sine examples") {
  KakeyaScanSummary s1 = kakeya_scan(kEx1, 50);
  CHECK(s1.leq_count == 50);
  CHECK(s1.pattern == KakeyaPattern::AllLeq);

  KakeyaScanSummary s3 = kakeya_scan(kEx3, 50);
  CHECK(s3.gt_count == 50);
  CHECK(s3.pattern == KakeyaPattern::AllGt);
}

TEST_CASE("scan outcomes match one-at-a-time comparisons exactly") {
  for (const auto& s : {SeriesSpec::sine({3, 2, 1}, Rational(2, 5)),
                        SeriesSpec::sine({5, 4, 3, 2, 1}, Rational(9, 10)), kGn}) {
    KakeyaScanSummary scan = kakeya_scan(s, 60);
    for (long long n = 1; n <= scan.horizon; ++n) {
      CHECK(scan.outcomes[static_cast<std::size_t>(n - 1)] == kakeya_compare(s, n));
    }
  }
}

TEST_CASE("scan horizons cap at the representable range") {
  KakeyaScanSummary s = kakeya_scan(kEx3, 100'000);
  CHECK(s.requested_horizon == 100'000);
  CHECK(s.horizon == max_safe_index(kEx3));
  CHECK(s.gt_count == s.horizon);
}

TEST_CASE("threshold ordering, label consistency and scans on random vectors") {
  std::mt19937_64 rng(31337);
  const Enclosure two_over_pi = div_pos(Enclosure::point(2.0), pi_enclosure());
  int interval_seen = 0, cantor_seen = 0;
  for (int it = 0; it < 300; ++it) {
    std::vector<long long> k = random_sorted_weights(rng);
    SeriesSpec probe = SeriesSpec::sine(k, Rational(1, 2));
    ThresholdReport t = thresholds_sine(probe);

    // t_cantor <= t_not_finite_union always holds as a real inequality
    CHECK_FALSE(certainly_gt(t.t_cantor, t.t_not_finite_union));
    // and with certified margin whenever l sits strictly below l_m = (2/pi)k_m
    Enclosure lm = two_over_pi * Enclosure::point(static_cast<double>(k.back()));
    if (certainly_lt(t.l, lm)) {
      CHECK(certainly_le(t.t_cantor, t.t_not_finite_union));
    }

    // random x: labels are single and certificates never contradict
    long long num = 1 + static_cast<long long>(rng() % ((1 << 20) - 1));
    SeriesSpec s = SeriesSpec::sine(k, Rational(num, 1 << 20));
    Classification c = classify_sine(s);
    if (c.label == Label::Interval) {
      for (const auto& cert : c.certificates) {
        CHECK(cert.theorem == "sine-interval-threshold");
      }
    }
    if (c.label == Label::CantorSet) {
      for (const auto& cert : c.certificates) {
        CHECK(cert.theorem != "sine-interval-threshold");
        CHECK(cert.theorem != "sine-cantorval-window");
      }
    }

    // monotonicity: an interval label persists under larger x
    if (c.label == Label::Interval) {
      long long num2 = num + (static_cast<long long>(rng() % ((1 << 20) - num)));
      Classification c2 = classify_sine(SeriesSpec::sine(k, Rational(num2, 1 << 20)));
      CHECK(c2.label == Label::Interval);
    }

    // scan agreement on a sample to keep the runtime modest
    if (c.label == Label::Interval && interval_seen < 12) {
      ++interval_seen;
      KakeyaScanSummary scan = kakeya_scan(s, std::min<long long>(300, max_safe_index(s)));
      CHECK(scan.gt_count == 0);
      CHECK(scan.indeterminate_count == 0);
    }
    if (c.label == Label::CantorSet && cantor_seen < 12) {
      ++cantor_seen;
      KakeyaScanSummary scan = kakeya_scan(s, std::min<long long>(300, max_safe_index(s)));
      CHECK(scan.leq_count == 0);
      CHECK(scan.indeterminate_count == 0);
    }
  }
}

TEST_CASE("the unknown window reports unknown with scan evidence") {
  // k=(2,1): thresholds 2/(3pi+2) ~ 0.1751 and (pi-1)/(pi+2) ~ 0.4165
  Classification c = classify_sine(SeriesSpec::sine({2, 1}, Rational(3, 10)));
  CHECK(c.label == Label::Unknown);
  CHECK(c.certificates.empty());
  CHECK(c.notes.find("term-vs-tail scan") != std::string::npos);
}
