#ifndef MATCHBOX_RATIONAL_HPP
#define MATCHBOX_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace matchbox {

// Arbitrary-precision signed integer.
using Integer = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, kept in lowest terms with a positive
// denominator after every operation, so operator== is structural equality
// of canonical forms.
using Rational = boost::multiprecision::cpp_rational;

// Canonical "numerator/denominator" rendering; the denominator is always
// written, e.g. "1/1", "-3/4".
inline std::string to_fraction_string(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

inline double to_double(const Rational& value) {
  return value.convert_to<double>();
}

inline Rational rational_pow(const Rational& base, std::uint32_t exp) {
  Integer num = pow(numerator(base), exp);
  Integer den = pow(denominator(base), exp);
  return Rational(std::move(num), std::move(den));
}

namespace detail {

inline Integer parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty() ||
      digits.find_first_not_of("0123456789") != std::string_view::npos) {
    throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
  }
  return Integer(std::string(digits));
}

}  // namespace detail

// Parses "a/b" or a finite decimal ("0.25" becomes 1/4, exactly). Exponent
// notation and binary floating point are not accepted.
inline Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }

  Rational value;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    Integer num = detail::parse_digits(body.substr(0, slash), text);
    Integer den = detail::parse_digits(body.substr(slash + 1), text);
    if (den == 0) {
      throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    }
    value = Rational(std::move(num), std::move(den));
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = body.substr(0, dot);
    const std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) {
      throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    }
    Integer scaled = whole.empty() ? Integer(0) : detail::parse_digits(whole, text);
    Integer den = 1;
    if (!frac.empty()) {
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      scaled = scaled * den + detail::parse_digits(frac, text);
    }
    value = Rational(std::move(scaled), std::move(den));
  } else {
    value = Rational(detail::parse_digits(body, text));
  }
  return negative ? Rational(-value) : value;
}

}  // namespace matchbox

#endif  // MATCHBOX_RATIONAL_HPP
