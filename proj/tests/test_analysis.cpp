#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "subsums/analysis.hpp"
#include "subsums/errors.hpp"

using namespace subsums;

namespace {

const SeriesSpec kEx1 = SeriesSpec::sine({2, 1}, Rational(1, 2));
const SeriesSpec kEx3 = SeriesSpec::sine({4, 1}, Rational(1, 10));
const SeriesSpec kMgCantor = SeriesSpec::multigeometric({3, 2}, Rational(1, 10));

}  // namespace

TEST_CASE("measure bounds are nonincreasing and certified") {
  auto m = measure_estimate(kMgCantor, 12);
  REQUIRE(m.size() == 12);
  for (std::size_t i = 1; i < m.size(); ++i) {
    CHECK(m[i].upper_bound <= m[i - 1].upper_bound);
  }
  // a Cantor-type set of zero measure: the bound collapses quickly
  CHECK(m.back().upper_bound < 0.01);

  CHECK_THROWS_AS(measure_estimate(kMgCantor, 0), DomainError);
}

TEST_CASE("an interval-certified series keeps the full-length bound") {
  auto m = measure_estimate(kEx1, 8);
  const double total = tail(kEx1, 0).hi;
  for (const auto& p : m) {
    CHECK(p.upper_bound == doctest::Approx(total).epsilon(1e-9));
  }
}

TEST_CASE("box dimension of a self-similar Cantor set lands near log4/log10") {
  auto est = box_dimension_estimate(kMgCantor, {8, 12, 16, 20});
  CHECK(est.counts.size() == 4);
  // card Sigma = 4 per block, ratio 1/10: dimension log 4 / log 10
  CHECK(est.slope > 0.552);
  CHECK(est.slope < 0.652);
  for (const auto& c : est.counts) CHECK(c.boxes >= 1);
}

TEST_CASE("box dimension of an interval-certified series is near 1") {
  auto est = box_dimension_estimate(kEx1, {8, 12, 16});
  CHECK(est.slope > 0.95);
  CHECK(est.slope < 1.05);
}

TEST_CASE("dimension estimator preconditions") {
  CHECK_THROWS_AS(box_dimension_estimate(kEx1, {8, 12}), DomainError);
  CHECK_THROWS_AS(box_dimension_estimate(kEx1, {8, 8, 8}), DomainError);  // degenerate fit
}

TEST_CASE("sandwich with identical specs reduces to term-vs-tail") {
  SandwichReport r = sandwich_check(kEx1, kEx1, kEx1, 40);
  REQUIRE(r.horizon == 40);
  REQUIRE(r.which_chain.size() == 40);
  for (long long n = 1; n <= 40; ++n) {
    Enclosure a = term(kEx1, n), t = tail(kEx1, n);
    ChainTag want = certainly_le(a, t) ? ChainTag::LeqChain : ChainTag::Neither;
    CHECK(r.which_chain[static_cast<std::size_t>(n - 1)] == want);
  }
  // x = 1/2 is interval-certified, so the leq chain holds everywhere
  CHECK(r.chain_holds_at.size() == 40);
  CHECK_FALSE(r.chain_fails_at.has_value());
}

TEST_CASE("horizon 0 gives an empty report") {
  SandwichReport r = sandwich_check(kEx1, kEx1, kEx1, 0);
  CHECK(r.horizon == 0);
  CHECK(r.which_chain.empty());
  CHECK(r.chain_holds_at.empty());
  CHECK_FALSE(r.chain_fails_at.has_value());
}

TEST_CASE("per-term jordan sandwich holds at every representable index") {
  // between the two comparison series with ratios 2x/pi and x, the sine
  // series terms satisfy a_n <= c_n <= b_n pointwise
  const Enclosure two_over_pi = div_pos(Enclosure::point(2.0), pi_enclosure());
  for (const Rational& xr : {Rational(1, 10), Rational(3, 10), Rational(1, 2)}) {
    Enclosure x = from_rational(xr);
    std::vector<long long> k = {2, 1};
    SeriesSpec c = SeriesSpec::sine(k, xr);
    SeriesSpec a = SeriesSpec::multigeometric(k, two_over_pi * x);
    SeriesSpec b = SeriesSpec::multigeometric(k, xr);
    long long horizon = std::min<long long>(
        1000, std::min(max_safe_index(a), std::min(max_safe_index(b), max_safe_index(c))));
    CHECK(horizon >= 400);
    for (long long n = 1; n <= horizon; ++n) {
      // a_n <= c_n certifies outright: the gap grows like (pi/2)^i
      CHECK(certainly_le(term(a, n), term(c, n)));
      // c_n <= b_n is k_j*sin(y) vs k_j*y for the same y; the brackets
      // separate only while y^2/6 clears their width, so certify there and
      // settle for non-contradiction beyond
      Enclosure cn = term(c, n), bn = term(b, n);
      CHECK_FALSE(certainly_gt(cn, bn));
      if (bn.mid() > 1e-4) CHECK(certainly_le(cn, bn));
      // the true inequality holds at every index (extended precision)
      long double cl = oracle::term_ld(c, n), bl = oracle::term_ld(b, n);
      CHECK(cl <= bl);
      CHECK(oracle::term_ld(a, n) <= cl * (1.0L + 1e-18L));
    }
    // the full report tags every index with a chain or Neither, no gaps
    SandwichReport rep = sandwich_check(a, c, b, std::min<long long>(horizon, 60));
    long long tagged = static_cast<long long>(rep.which_chain.size());
    CHECK(tagged == std::min<long long>(horizon, 60));
  }
}

TEST_CASE("strict chains never hold reflexively") {
  // GN alternates term<=tail / term>tail; with a = c = b only chain 1 can
  // fire (chain 2 opens with a strict r^a < r^c, false for one series)
  SeriesSpec gn = SeriesSpec::multigeometric({3, 2}, Rational(1, 4));
  SandwichReport r = sandwich_check(gn, gn, gn, 10);
  for (long long n = 1; n <= 10; ++n) {
    ChainTag tag = r.which_chain[static_cast<std::size_t>(n - 1)];
    CHECK(tag == (n % 2 == 1 ? ChainTag::LeqChain : ChainTag::Neither));
  }
  CHECK(r.chain_holds_at.size() == 5);
  REQUIRE(r.chain_fails_at.has_value());
  CHECK(*r.chain_fails_at == 2);
}

TEST_CASE("a genuinely ordered triple certifies the strict chain") {
  // explicit prefixes with strictly ordered tails at n=1:
  //   r^a_1 in [1, 1+1/99], r^c_1 in [2, 2+2/99], r^b_1 in [3, 3+3/99],
  // all far below a_1 = 100 < c_1 = 101 < b_1 = 102
  SeriesSpec a = SeriesSpec::explicit_prefix({Rational(100, 1), Rational(1, 1)}, Rational(1, 100));
  SeriesSpec c = SeriesSpec::explicit_prefix({Rational(101, 1), Rational(2, 1)}, Rational(1, 100));
  SeriesSpec b = SeriesSpec::explicit_prefix({Rational(102, 1), Rational(3, 1)}, Rational(1, 100));
  SandwichReport r = sandwich_check(a, c, b, 2);
  CHECK(r.which_chain[0] == ChainTag::GtChain);
  // past the prefix the envelopes all start at 0, so nothing strict certifies
  CHECK(r.which_chain[1] == ChainTag::Neither);
  REQUIRE(r.chain_fails_at.has_value());
  CHECK(*r.chain_fails_at == 2);
}
