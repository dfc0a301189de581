// Prints the exact distribution and the first two raw moments for a few
// parameter choices, with decimal approximations alongside.

#include <cstdint>
#include <iostream>

#include <matchbox/matchbox.hpp>

int main() {
  using namespace matchbox;

  const struct {
    std::uint32_t n;
    Rational p;
  } cases[] = {{3, Rational(1, 2)}, {3, Rational(1, 4)}, {5, Rational(9, 10)}};

  for (const auto& scenario : cases) {
    const MatchboxParams params(scenario.n, scenario.p);
    std::cout << "n = " << scenario.n << ", p = " << to_fraction_string(scenario.p) << "\n";
    const Pmf pmf = pmf_generalized(params);
    for (std::size_t r = 0; r < pmf.size(); ++r) {
      std::cout << "  P(" << r << ") = " << to_fraction_string(pmf[r]) << "  (~"
                << to_double(pmf[r]) << ")\n";
    }
    std::cout << "  sum  = " << to_fraction_string(pmf_sum(pmf)) << "\n";
    std::cout << "  mean = " << to_fraction_string(moment(params, 1))
              << ", second moment = " << to_fraction_string(moment(params, 2)) << "\n\n";
  }
  return 0;
}
