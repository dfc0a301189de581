#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>

#include <matchbox/identity.hpp>

#include "oracles.hpp"

using matchbox::corollary_check;
using matchbox::CorollaryReport;
using matchbox::identity_lhs;
using matchbox::identity_rhs;
using matchbox::IdentityReport;
using matchbox::MatchboxParams;
using matchbox::Rational;
using matchbox::s1_direct;
using matchbox::s2_direct;
using matchbox::sum_via_hypergeometric;
using matchbox::verify_identity;

TEST_CASE("series combination at small n") {
  CHECK(identity_lhs(MatchboxParams(0, Rational(1, 3))) == 1);
  CHECK(identity_lhs(MatchboxParams(1, Rational(1, 3))) == Rational(9, 4));
  CHECK(identity_lhs(MatchboxParams(1, Rational(1, 2))) == 2);
}

TEST_CASE("closed forms at small n") {
  const auto zero = identity_rhs(MatchboxParams(0, Rational(1, 3)));
  CHECK(zero.factorial_form == 1);
  CHECK(zero.pochhammer_form == 1);

  const auto one = identity_rhs(MatchboxParams(1, Rational(1, 3)));
  CHECK(one.factorial_form == Rational(9, 4));
  CHECK(one.pochhammer_form == Rational(9, 4));

  const auto two = identity_rhs(MatchboxParams(2, Rational(1, 2)));
  CHECK(two.factorial_form == Rational(8, 3));
  CHECK(two.pochhammer_form == Rational(8, 3));
}

TEST_CASE("identity verification at spot values") {
  IdentityReport report = verify_identity(MatchboxParams(0, Rational(1, 2)));
  CHECK(report.equal);
  CHECK(report.lhs == 1);

  report = verify_identity(MatchboxParams(1, Rational(1, 3)));
  CHECK(report.equal);
  CHECK(report.lhs == Rational(9, 4));

  CHECK(verify_identity(MatchboxParams(10, Rational(9, 10))).equal);
}

TEST_CASE("identity holds across the standard grid") {
  const Rational grid[] = {Rational(1, 2),    Rational(1, 3),     Rational(1, 4),
                           Rational(2, 5),    Rational(9, 10),    Rational(1, 1000),
                           Rational(999, 1000)};
  for (std::uint32_t n = 0; n <= 50; ++n) {
    for (const Rational& p : grid) {
      CHECK(verify_identity(MatchboxParams(n, p)).equal);
    }
  }
}

TEST_CASE("the two closed forms agree for random p") {
  std::mt19937_64 rng(2024);
  for (std::uint32_t n = 0; n <= 60; ++n) {
    const auto forms = identity_rhs(MatchboxParams(n, oracle::random_probability(rng)));
    CHECK(forms.factorial_form == forms.pochhammer_form);
  }
}

TEST_CASE("series combination is symmetric in p and q") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint32_t n = static_cast<std::uint32_t>(rng() % 31);
    const Rational p = oracle::random_probability(rng);
    CHECK(identity_lhs(MatchboxParams(n, p)) == identity_lhs(MatchboxParams(n, 1 - p)));
  }
}

TEST_CASE("hypergeometric form of the normalization sum") {
  CHECK(sum_via_hypergeometric(MatchboxParams(0, Rational(1, 3))) == 1);
  CHECK(sum_via_hypergeometric(MatchboxParams(3, Rational(1, 4))) == 1);
  CHECK(sum_via_hypergeometric(MatchboxParams(12, Rational(5, 7))) == 1);

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const MatchboxParams params(static_cast<std::uint32_t>(rng() % 41),
                                oracle::random_probability(rng));
    const Rational total = sum_via_hypergeometric(params);
    CHECK(total == 1);
    CHECK(total == s1_direct(params) + s2_direct(params));
  }
}

TEST_CASE("corollary specialization at small n") {
  const CorollaryReport zero = corollary_check(0);
  CHECK(zero.value_at_2 == 1);
  CHECK(zero.pochhammer_ratio == 1);
  CHECK(zero.value_at_1 == 1);
  CHECK(zero.chu_vandermonde_ratio == 1);

  const CorollaryReport one = corollary_check(1);
  CHECK(one.value_at_2 == 2);
  CHECK(one.pochhammer_ratio == 2);
  CHECK(one.value_at_1 == Rational(3, 2));
  CHECK(one.chu_vandermonde_ratio == Rational(3, 2));

  const CorollaryReport two = corollary_check(2);
  CHECK(two.value_at_2 == Rational(8, 3));
  CHECK(two.pochhammer_ratio == Rational(8, 3));
  CHECK(two.value_at_1 == Rational(5, 3));
}

TEST_CASE("corollary sweep") {
  for (std::uint32_t n = 0; n <= 50; ++n) {
    const CorollaryReport report = corollary_check(n);
    CHECK(report.matches_at_2);
    CHECK(report.matches_at_1);
    // from n = 1 on, the argument-1 value differs from the Pochhammer quotient
    if (n >= 1) CHECK(report.value_at_1 != report.pochhammer_ratio);
  }
}
