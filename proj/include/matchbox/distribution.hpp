#ifndef MATCHBOX_DISTRIBUTION_HPP
#define MATCHBOX_DISTRIBUTION_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "matchbox/combinatorics.hpp"
#include "matchbox/rational.hpp"

namespace matchbox {

// Initial match count n per box and box-one selection probability p, with
// 0 < p < 1 strictly. The endpoints are rejected here because downstream
// formulas divide by p^n q^n and evaluate series at 1/p and 1/q. q = 1 - p is
// always derived, never stored.
class MatchboxParams {
 public:
  MatchboxParams(std::uint32_t n, Rational p) : n_(n), p_(std::move(p)) {
    if (p_ <= 0 || p_ >= 1) {
      throw std::domain_error("selection probability must satisfy 0 < p < 1, got " +
                              to_fraction_string(p_));
    }
  }

  std::uint32_t n() const noexcept { return n_; }
  const Rational& p() const noexcept { return p_; }
  Rational q() const { return 1 - p_; }

 private:
  std::uint32_t n_;
  Rational p_;
};

// Exact distribution of the matches left in the other box when one box is
// first found empty, indexed r = 0..n.
using Pmf = std::vector<Rational>;

inline Rational pmf_sum(const Pmf& pmf) {
  Rational total = 0;
  for (const Rational& value : pmf) total += value;
  return total;
}

// P(r) = C(2n-r, n) (p^{n+1} q^{n-r} + q^{n+1} p^{n-r})
inline Pmf pmf_generalized(const MatchboxParams& params) {
  const std::uint32_t n = params.n();
  const Rational p = params.p();
  const Rational q = params.q();
  const Rational p_head = rational_pow(p, n + 1);
  const Rational q_head = rational_pow(q, n + 1);

  Pmf probs(n + 1);
  Rational q_tail = rational_pow(q, n);  // q^{n-r}, walked down as r grows
  Rational p_tail = rational_pow(p, n);
  for (std::uint32_t r = 0; r <= n; ++r) {
    probs[r] = Rational(binomial(2 * n - r, n)) * (p_head * q_tail + q_head * p_tail);
    q_tail /= q;
    p_tail /= p;
  }
  return probs;
}

// Unbiased boxes: P(r) = 2^{r-2n} C(2n-r, n)
inline Pmf pmf_classical(std::uint32_t n) {
  Pmf probs(n + 1);
  Integer denom = pow(Integer(2), 2 * n);  // 2^{2n-r}
  for (std::uint32_t r = 0; r <= n; ++r) {
    probs[r] = Rational(binomial(2 * n - r, n), denom);
    denom /= 2;
  }
  return probs;
}

namespace detail {

// sum_{r=0}^{n} C(2n-r, n) sel^{n+1} oth^{n-r}
inline Rational matchbox_half_sum(std::uint32_t n, const Rational& sel,
                                  const Rational& oth) {
  Rational total = 0;
  Rational oth_tail = rational_pow(oth, n);
  for (std::uint32_t r = 0; r <= n; ++r) {
    total += Rational(binomial(2 * n - r, n)) * oth_tail;
    oth_tail /= oth;
  }
  return rational_pow(sel, n + 1) * total;
}

// Base value at n = 0, then value_k = value_{k-1} + (pq)^k C(2k, k) correction.
// Only the previous value is carried, mirroring the telescoping proof that
// collapses the sum to its n = 0 case.
inline Rational matchbox_telescoped(std::uint32_t n, const Rational& base,
                                    const Rational& correction, const Rational& pq) {
  Rational value = base;
  Rational pq_pow = 1;
  for (std::uint32_t k = 1; k <= n; ++k) {
    pq_pow *= pq;
    value += pq_pow * Rational(binomial(2 * k, k)) * correction;
  }
  return value;
}

}  // namespace detail

// The two halves of the normalization sum, summed directly.
inline Rational s1_direct(const MatchboxParams& params) {
  return detail::matchbox_half_sum(params.n(), params.p(), params.q());
}

inline Rational s2_direct(const MatchboxParams& params) {
  return detail::matchbox_half_sum(params.n(), params.q(), params.p());
}

// The same two halves through the Pascal-rule recurrences
//   S_n^(1) = S_{n-1}^(1) + p^n q^n C(2n, n) (1/2 - q),   S_0^(1) = p
//   S_n^(2) = S_{n-1}^(2) + p^n q^n C(2n, n) (1/2 - p),   S_0^(2) = q
inline Rational s1_recurrence(const MatchboxParams& params) {
  return detail::matchbox_telescoped(params.n(), params.p(),
                                     Rational(1, 2) - params.q(),
                                     params.p() * params.q());
}

inline Rational s2_recurrence(const MatchboxParams& params) {
  return detail::matchbox_telescoped(params.n(), params.q(),
                                     Rational(1, 2) - params.p(),
                                     params.p() * params.q());
}

struct NormalizationReport {
  Rational s1;
  Rational s2;
  Rational total;  // s1 + s2; exactly 1 for every valid parameter set
};

inline NormalizationReport normalization(const MatchboxParams& params) {
  NormalizationReport report;
  report.s1 = s1_direct(params);
  report.s2 = s2_direct(params);
  report.total = report.s1 + report.s2;
  return report;
}

// k-th raw moment sum_r r^k P(r), by direct summation over the exact pmf.
inline Rational moment(const MatchboxParams& params, std::uint32_t k) {
  const Pmf probs = pmf_generalized(params);
  Rational total = 0;
  for (std::uint32_t r = 0; r < probs.size(); ++r) {
    total += Rational(pow(Integer(r), k)) * probs[r];
  }
  return total;
}

}  // namespace matchbox

#endif  // MATCHBOX_DISTRIBUTION_HPP
