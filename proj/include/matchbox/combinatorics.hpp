#ifndef MATCHBOX_COMBINATORICS_HPP
#define MATCHBOX_COMBINATORICS_HPP

#include <cstdint>

#include "matchbox/rational.hpp"

namespace matchbox {

// n! by iterated multiplication.
inline Integer factorial(std::uint32_t n) {
  Integer result = 1;
  for (std::uint32_t i = 2; i <= n; ++i) result *= i;
  return result;
}

// C(n, k) by the multiplicative formula; dividing after each step keeps every
// intermediate integral. Zero outside 0 <= k <= n, the usual convention, so
// callers can sum over full index ranges.
inline Integer binomial(std::uint32_t n, std::int64_t k) {
  if (k < 0 || k > static_cast<std::int64_t>(n)) return 0;
  std::uint32_t kk = static_cast<std::uint32_t>(k);
  if (kk > n - kk) kk = n - kk;
  Integer result = 1;
  for (std::uint32_t i = 1; i <= kk; ++i) {
    result *= n - kk + i;
    result /= i;
  }
  return result;
}

// Rising factorial (a)_n = a(a+1)...(a+n-1). The empty product is 1 for every
// a, including zero and negative integers. Computed as an iterated product,
// never through a Gamma function, so non-positive integer arguments stay
// exact (the product is simply zero once a factor crosses zero).
inline Rational pochhammer(const Rational& a, std::uint32_t n) {
  Rational result = 1;
  Rational factor = a;
  for (std::uint32_t i = 0; i < n; ++i) {
    result *= factor;
    if (result == 0) return result;
    factor += 1;
  }
  return result;
}

}  // namespace matchbox

#endif  // MATCHBOX_COMBINATORICS_HPP
