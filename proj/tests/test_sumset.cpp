#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "subsums/errors.hpp"
#include "subsums/sumset.hpp"

using namespace subsums;

TEST_CASE("sumset worked examples") {
  SumsetInfo s = sumset({8, 7, 6, 5, 4});
  CHECK(s.n0 == 4);
  CHECK(s.n_star == 22);
  CHECK(s.sigma.front() == 0);
  CHECK(s.sigma.back() == 30);

  s = sumset({3, 2});
  CHECK(s.sigma == std::vector<long long>{0, 2, 3, 5});
  CHECK(s.card_sigma == 4);
  CHECK(s.n0 == 2);
  CHECK(s.n_star == 1);

  s = sumset({1});
  CHECK(s.sigma == std::vector<long long>{0, 1});
  CHECK(s.n0 == 1);
  CHECK(s.n_star == 0);
}

TEST_CASE("ties pick the smallest run start") {
  // runs {2}, {9}, {11} all have length 1
  SumsetInfo s = sumset({9, 2});
  CHECK(s.n0 == 2);
  CHECK(s.n_star == 0);

  // {1} vs {4,5}: the longer run wins even though it starts later
  s = sumset({4, 1});
  CHECK(s.n0 == 4);
  CHECK(s.n_star == 1);
}

TEST_CASE("duplicated weights deduplicate sums") {
  SumsetInfo s = sumset({2, 2, 2});
  CHECK(s.sigma == std::vector<long long>{0, 2, 4, 6});
  CHECK(s.card_sigma == 4);
  CHECK(s.n0 == 2);
  CHECK(s.n_star == 0);
}

TEST_CASE("sumset equals the naive recursive oracle on 1e3 random vectors") {
  std::mt19937_64 rng(123456);
  for (int it = 0; it < 1000; ++it) {
    std::size_t m = 1 + rng() % 8;
    std::vector<long long> k(m);
    for (auto& v : k) v = 1 + static_cast<long long>(rng() % 50);
    SumsetInfo got = sumset(k);
    std::vector<long long> want = oracle::sumset_naive(k);
    CHECK(got.sigma == want);
    CHECK(got.card_sigma == static_cast<long long>(want.size()));
    // every integer in [n0, n0+n*] really is a subset sum
    for (long long v = got.n0; v <= got.n0 + got.n_star; ++v) {
      CHECK(std::binary_search(want.begin(), want.end(), v));
    }
    // and the run cannot be extended on either side
    bool left_extendable =
        got.n0 > 1 && std::binary_search(want.begin(), want.end(), got.n0 - 1);
    bool right_extendable =
        std::binary_search(want.begin(), want.end(), got.n0 + got.n_star + 1);
    CHECK_FALSE(left_extendable);
    CHECK_FALSE(right_extendable);
  }
}

TEST_CASE("meet-in-the-middle variant agrees with the plain path") {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 200; ++it) {
    std::size_t m = 1 + rng() % 12;
    std::vector<long long> k(m);
    for (auto& v : k) v = 1 + static_cast<long long>(rng() % 30);
    SumsetInfo a = sumset(k);
    SumsetInfo b = sumset_meet_in_middle(k);
    CHECK(a.sigma == b.sigma);
    CHECK(a.n0 == b.n0);
    CHECK(a.n_star == b.n_star);
  }
  // and it handles m > 24 when the value range stays small
  std::vector<long long> k(30, 3);
  SumsetInfo s = sumset_meet_in_middle(k);
  CHECK(s.card_sigma == 31);
  CHECK(s.n0 == 3);
  CHECK(s.n_star == 0);
}

TEST_CASE("guards") {
  std::vector<long long> k(25, 1);
  CHECK_THROWS_AS(sumset(k), GuardError);
  CHECK_THROWS_AS(sumset({}), DomainError);
  CHECK_THROWS_AS(sumset({0}), DomainError);
  CHECK_THROWS_AS(sumset({-3}), DomainError);
}
