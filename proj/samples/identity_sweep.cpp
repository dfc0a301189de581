// Walks the two-term hypergeometric identity for small n at a fixed bias and
// prints both evaluations of the corollary series.

#include <cstdint>
#include <iostream>

#include <matchbox/matchbox.hpp>

int main() {
  using namespace matchbox;

  const Rational p(2, 7);
  std::cout << "p " << to_fraction_string(p) << ", q " << to_fraction_string(1 - p) << "\n";
  for (std::uint32_t n = 0; n <= 10; ++n) {
    const IdentityReport report = verify_identity(MatchboxParams(n, p));
    std::cout << "n = " << n << ": p*2F1(-n,1;-2n;1/q) + q*2F1(-n,1;-2n;1/p) = "
              << to_fraction_string(report.lhs)
              << (report.equal ? "  == both closed forms" : "  MISMATCH") << "\n";
  }

  std::cout << "\n2F1(-n, 1; -2n; x) against closed forms:\n";
  for (std::uint32_t n = 0; n <= 10; ++n) {
    const CorollaryReport closed = corollary_check(n);
    std::cout << "n = " << n << ": at x=2 " << to_fraction_string(closed.value_at_2)
              << " vs (1)_n/(1/2)_n " << to_fraction_string(closed.pochhammer_ratio)
              << "; at x=1 " << to_fraction_string(closed.value_at_1)
              << " vs (2n+1)/(n+1) " << to_fraction_string(closed.chu_vandermonde_ratio)
              << "\n";
  }
  return 0;
}
