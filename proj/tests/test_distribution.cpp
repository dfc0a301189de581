#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>

#include <matchbox/distribution.hpp>

#include "oracles.hpp"

using matchbox::MatchboxParams;
using matchbox::moment;
using matchbox::normalization;
using matchbox::Pmf;
using matchbox::pmf_classical;
using matchbox::pmf_generalized;
using matchbox::pmf_sum;
using matchbox::Rational;
using matchbox::s1_direct;
using matchbox::s1_recurrence;
using matchbox::s2_direct;
using matchbox::s2_recurrence;

TEST_CASE("selection probability must lie strictly inside (0, 1)") {
  CHECK_THROWS_AS(MatchboxParams(1, Rational(0)), std::domain_error);
  CHECK_THROWS_AS(MatchboxParams(1, Rational(1)), std::domain_error);
  CHECK_THROWS_AS(MatchboxParams(1, Rational(-1, 2)), std::domain_error);
  CHECK_THROWS_AS(MatchboxParams(1, Rational(3, 2)), std::domain_error);
  const MatchboxParams params(4, Rational(1, 3));
  CHECK(params.n() == 4);
  CHECK(params.q() == Rational(2, 3));
}

TEST_CASE("generalized pmf at small n") {
  CHECK(pmf_generalized(MatchboxParams(0, Rational(1, 3))) == Pmf{Rational(1)});
  CHECK(pmf_generalized(MatchboxParams(1, Rational(1, 3))) ==
        Pmf{Rational(4, 9), Rational(5, 9)});
  CHECK(pmf_generalized(MatchboxParams(1, Rational(1, 2))) ==
        Pmf{Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("classical pmf at small n") {
  CHECK(pmf_classical(0) == Pmf{Rational(1)});
  CHECK(pmf_classical(1) == Pmf{Rational(1, 2), Rational(1, 2)});
  CHECK(pmf_classical(2) == Pmf{Rational(3, 8), Rational(3, 8), Rational(1, 4)});
}

TEST_CASE("classical equals generalized at p = 1/2") {
  for (std::uint32_t n = 0; n <= 60; ++n) {
    CHECK(pmf_generalized(MatchboxParams(n, Rational(1, 2))) == pmf_classical(n));
  }
}

TEST_CASE("pmf is symmetric under swapping the boxes") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t n = static_cast<std::uint32_t>(rng() % 41);
    const Rational p = oracle::random_probability(rng);
    CHECK(pmf_generalized(MatchboxParams(n, p)) == pmf_generalized(MatchboxParams(n, 1 - p)));
  }
}

TEST_CASE("pmf matches direct substitution") {
  const auto pascal = oracle::pascal_triangle(60);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const std::uint32_t n = static_cast<std::uint32_t>(rng() % 31);
    const Rational p = oracle::random_probability(rng);
    const Pmf pmf = pmf_generalized(MatchboxParams(n, p));
    REQUIRE(pmf.size() == n + 1);
    for (std::uint32_t r = 0; r <= n; ++r) {
      CHECK(pmf[r] == oracle::pmf_entry(n, r, p, pascal));
    }
  }
}

TEST_CASE("pmf entries are strictly positive and sum to one") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint32_t n = static_cast<std::uint32_t>(rng() % 51);
    const Pmf pmf = pmf_generalized(MatchboxParams(n, oracle::random_probability(rng)));
    for (const Rational& value : pmf) {
      CHECK(value > 0);
      CHECK(value <= 1);
    }
    CHECK(pmf_sum(pmf) == 1);
  }
}

TEST_CASE("half sums summed directly") {
  CHECK(s1_direct(MatchboxParams(0, Rational(1, 3))) == Rational(1, 3));
  CHECK(s2_direct(MatchboxParams(0, Rational(1, 3))) == Rational(2, 3));
  CHECK(s1_direct(MatchboxParams(1, Rational(1, 3))) == Rational(7, 27));
}

TEST_CASE("half sums through the recurrence") {
  CHECK(s1_recurrence(MatchboxParams(0, Rational(1, 3))) == Rational(1, 3));
  CHECK(s1_recurrence(MatchboxParams(1, Rational(1, 3))) == Rational(7, 27));
  // the correction term vanishes at p = 1/2
  CHECK(s1_recurrence(MatchboxParams(1, Rational(1, 2))) == Rational(1, 2));
  CHECK(s2_recurrence(MatchboxParams(0, Rational(1, 3))) == Rational(2, 3));
}

TEST_CASE("direct and recurrence routes agree and normalize") {
  std::mt19937_64 rng(11);
  for (std::uint32_t n = 0; n <= 60; ++n) {
    const MatchboxParams params(n, oracle::random_probability(rng));
    const Rational s1 = s1_direct(params);
    const Rational s2 = s2_direct(params);
    CHECK(s1 == s1_recurrence(params));
    CHECK(s2 == s2_recurrence(params));
    CHECK(s1 + s2 == 1);
  }
}

TEST_CASE("normalization report") {
  CHECK(normalization(MatchboxParams(0, Rational(1, 3))).total == 1);

  const auto report = normalization(MatchboxParams(7, Rational(2, 5)));
  CHECK(report.total == 1);
  CHECK(report.s1 + report.s2 == report.total);

  // precision stress: heavily biased boxes
  CHECK(normalization(MatchboxParams(25, Rational(1, 1000))).total == 1);
}

TEST_CASE("raw moments by direct summation") {
  CHECK(moment(MatchboxParams(1, Rational(1, 2)), 1) == Rational(1, 2));
  CHECK(moment(MatchboxParams(2, Rational(1, 2)), 1) == Rational(7, 8));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const MatchboxParams params(static_cast<std::uint32_t>(rng() % 21),
                                oracle::random_probability(rng));
    CHECK(moment(params, 0) == 1);
  }

  // k = 1 is the expectation read straight off the pmf
  const MatchboxParams params(9, Rational(3, 7));
  const Pmf pmf = pmf_generalized(params);
  Rational expected = 0;
  for (std::uint32_t r = 0; r < pmf.size(); ++r) expected += Rational(r) * pmf[r];
  CHECK(moment(params, 1) == expected);
}
