#ifndef MATCHBOX_HYPERGEOMETRIC_HPP
#define MATCHBOX_HYPERGEOMETRIC_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "matchbox/combinatorics.hpp"
#include "matchbox/rational.hpp"

namespace matchbox {

// Raised when the lower parameter of a terminating Gauss series is a
// non-positive integer -k with k smaller than the termination index, so a
// denominator Pochhammer vanishes under a nonzero numerator somewhere in the
// sum. That parameter regime has no finite-sum reading and is rejected.
class IllDefinedParameters : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

// c = -k for some non-negative integer k?
inline bool is_nonpositive_integer(const Rational& c) {
  return c <= 0 && denominator(c) == 1;
}

}  // namespace detail

// Terminating Gauss hypergeometric series
//
//   2F1(-m, b; c; x) = sum_{r=0}^{m} (-m)_r (b)_r / ((c)_r r!) x^r,
//
// evaluated in exact rational arithmetic. The upper parameter is taken as a
// non-negative integer m (meaning a = -m), which makes termination after
// m + 1 terms a type-level fact.
//
// Parameters are validated on construction: a non-positive integer c = -k is
// accepted only when k >= m, since otherwise (c)_r vanishes for some r <= m
// while the numerator does not. The check runs before any term is computed,
// even when x = 0 would mask every division.
class TerminatingF21 {
 public:
  TerminatingF21(std::uint32_t m, Rational b, Rational c, Rational x)
      : m_(m), b_(std::move(b)), c_(std::move(c)), x_(std::move(x)) {
    if (detail::is_nonpositive_integer(c_) && -c_ < m_) {
      throw IllDefinedParameters(
          "2F1(-" + std::to_string(m_) + ", b; " + to_fraction_string(c_) +
          "; x): lower parameter vanishes inside the sum");
    }
  }

  // a = -m
  std::uint32_t termination_index() const noexcept { return m_; }
  const Rational& b() const noexcept { return b_; }
  const Rational& c() const noexcept { return c_; }
  const Rational& x() const noexcept { return x_; }

  // The r-th summand, built from Pochhammer products. This is a separate
  // route from the ratio recurrence used by sum().
  Rational term(std::uint32_t r) const {
    if (r > m_) {
      throw std::out_of_range("term index " + std::to_string(r) +
                              " exceeds series length " + std::to_string(m_));
    }
    const Rational upper = pochhammer(Rational(-static_cast<std::int64_t>(m_)), r) *
                           pochhammer(b_, r);
    const Rational lower = pochhammer(c_, r) * Rational(factorial(r));
    return upper / lower * rational_pow(x_, r);
  }

  // Exact sum of all m + 1 terms, accumulated through the term ratio
  //
  //   term_{r+1} = term_r * (-m + r)(b + r) / ((c + r)(r + 1)) * x,
  //
  // so no Pochhammer is recomputed. The r = 0 term is 1 unconditionally.
  Rational sum() const {
    Rational total = 1;
    Rational term = 1;
    for (std::uint32_t r = 0; r < m_; ++r) {
      const Rational upper = Rational(static_cast<std::int64_t>(r) -
                                      static_cast<std::int64_t>(m_)) *
                             (b_ + r);
      term *= upper / ((c_ + r) * (r + 1)) * x_;
      if (term == 0) break;  // (b)_r or x hit zero; every later term vanishes
      total += term;
    }
    return total;
  }

 private:
  std::uint32_t m_;
  Rational b_;
  Rational c_;
  Rational x_;
};

inline Rational eval_terminating_2f1(std::uint32_t m, const Rational& b,
                                     const Rational& c, const Rational& x) {
  return TerminatingF21(m, b, c, x).sum();
}

// Single summand of 2F1(-m, b; c; x). Only the requested term has to be
// well defined: an integer c = -k is rejected when k < r, where (c)_r = 0,
// but a parameter set whose later terms blow up is still accepted.
inline Rational f21_term(std::uint32_t m, const Rational& b, const Rational& c,
                         const Rational& x, std::uint32_t r) {
  if (r > m) {
    throw std::out_of_range("term index " + std::to_string(r) +
                            " exceeds series length " + std::to_string(m));
  }
  if (detail::is_nonpositive_integer(c) && -c < r) {
    throw IllDefinedParameters("2F1 term " + std::to_string(r) + ": (" +
                               to_fraction_string(c) + ")_r vanishes");
  }
  const Rational upper =
      pochhammer(Rational(-static_cast<std::int64_t>(m)), r) * pochhammer(b, r);
  const Rational lower = pochhammer(c, r) * Rational(factorial(r));
  return upper / lower * rational_pow(x, r);
}

}  // namespace matchbox

#endif  // MATCHBOX_HYPERGEOMETRIC_HPP
