#ifndef MATCHBOX_IDENTITY_HPP
#define MATCHBOX_IDENTITY_HPP

#include <cstdint>
#include <utility>

#include "matchbox/combinatorics.hpp"
#include "matchbox/distribution.hpp"
#include "matchbox/hypergeometric.hpp"
#include "matchbox/rational.hpp"

namespace matchbox {

// The two-term hypergeometric combination
//
//   p 2F1(-n, 1; -2n; 1/q) + q 2F1(-n, 1; -2n; 1/p).
//
// With c = -2n and termination index n the parameter regime is always valid,
// so this never raises.
inline Rational identity_lhs(const MatchboxParams& params) {
  const std::uint32_t n = params.n();
  const Rational b = 1;
  const Rational c = -2 * static_cast<std::int64_t>(n);
  return params.p() * eval_terminating_2f1(n, b, c, 1 / params.q()) +
         params.q() * eval_terminating_2f1(n, b, c, 1 / params.p());
}

// Both closed forms of the same quantity, computed through disjoint routes so
// their agreement is itself a check.
struct RhsForms {
  Rational factorial_form;   // (n!)^2 / (p^n q^n (2n)!)
  Rational pochhammer_form;  // (1)_n / (2^{2n} p^n q^n (1/2)_n)
};

inline RhsForms identity_rhs(const MatchboxParams& params) {
  const std::uint32_t n = params.n();
  const Rational pq_pow = rational_pow(params.p() * params.q(), n);
  const Integer n_fact = factorial(n);

  RhsForms forms;
  forms.factorial_form = Rational(n_fact * n_fact, factorial(2 * n)) / pq_pow;
  forms.pochhammer_form =
      pochhammer(Rational(1), n) /
      (Rational(pow(Integer(2), 2 * n)) * pq_pow * pochhammer(Rational(1, 2), n));
  return forms;
}

struct IdentityReport {
  Rational lhs;
  Rational rhs_factorial_form;
  Rational rhs_pochhammer_form;
  bool equal;  // all three pairwise structurally equal
};

// Checks the series combination against both closed forms. Equality is
// structural equality of canonical rationals; any false is a library defect.
inline IdentityReport verify_identity(const MatchboxParams& params) {
  IdentityReport report;
  report.lhs = identity_lhs(params);
  RhsForms rhs = identity_rhs(params);
  report.rhs_factorial_form = std::move(rhs.factorial_form);
  report.rhs_pochhammer_form = std::move(rhs.pochhammer_form);
  report.equal = report.lhs == report.rhs_factorial_form &&
                 report.rhs_factorial_form == report.rhs_pochhammer_form;
  return report;
}

// Normalization sum in hypergeometric form,
//
//   S_n = p^n q^n ((2n)!/(n!)^2) {p 2F1(-n, 1; -2n; 1/q) + q 2F1(-n, 1; -2n; 1/p)},
//
// which must equal 1 exactly.
inline Rational sum_via_hypergeometric(const MatchboxParams& params) {
  const std::uint32_t n = params.n();
  const Integer n_fact = factorial(n);
  const Rational prefactor =
      rational_pow(params.p() * params.q(), n) * Rational(factorial(2 * n), n_fact * n_fact);
  return prefactor * identity_lhs(params);
}

// Specializing the identity at p = q = 1/2 turns both series arguments into
// 1/q = 2, giving 2F1(-n, 1; -2n; 2) = (1)_n/(1/2)_n. The same series at
// argument 1 is instead the Chu-Vandermonde value (2n+1)/(n+1). Both
// evaluations are reported side by side; for n >= 1 they differ.
struct CorollaryReport {
  Rational value_at_2;             // 2F1(-n, 1; -2n; 2)
  Rational pochhammer_ratio;       // (1)_n / (1/2)_n
  Rational value_at_1;             // 2F1(-n, 1; -2n; 1)
  Rational chu_vandermonde_ratio;  // (2n+1)/(n+1)
  bool matches_at_2;               // value_at_2 == pochhammer_ratio
  bool matches_at_1;               // value_at_1 == chu_vandermonde_ratio
};

inline CorollaryReport corollary_check(std::uint32_t n) {
  const Rational b = 1;
  const Rational c = -2 * static_cast<std::int64_t>(n);

  CorollaryReport report;
  report.value_at_2 = eval_terminating_2f1(n, b, c, 2);
  report.pochhammer_ratio = pochhammer(Rational(1), n) / pochhammer(Rational(1, 2), n);
  report.value_at_1 = eval_terminating_2f1(n, b, c, 1);
  report.chu_vandermonde_ratio = Rational(2 * n + 1, n + 1);
  report.matches_at_2 = report.value_at_2 == report.pochhammer_ratio;
  report.matches_at_1 = report.value_at_1 == report.chu_vandermonde_ratio;
  return report;
}

}  // namespace matchbox

#endif  // MATCHBOX_IDENTITY_HPP
