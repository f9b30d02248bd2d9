#ifndef CANTORVAL_RATIONAL_HPP
#define CANTORVAL_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "cantorval/errors.hpp"

namespace cantorval {

/// Arbitrary-precision rational. GMP keeps results of arithmetic in lowest
/// terms with a positive denominator; every constructor below canonicalizes.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw ParseError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace detail {
inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}
}  // namespace detail

/// Parses "n", "-n", "p/q" or "-p/q". Whitespace and other forms are rejected.
inline Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!detail::all_digits(num) || !detail::all_digits(den))
    throw ParseError("not a rational: \"" + std::string(text) + "\"");
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  if (negative) p = -p;
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// "p/q", or "n" for integers.
inline std::string to_string(const Rational& q) { return q.get_str(10); }

inline Rational pow(const Rational& base, unsigned long exponent) {
  Rational result(1);
  for (unsigned long i = 0; i < exponent; ++i) result *= base;
  return result;
}

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace cantorval

#endif  // CANTORVAL_RATIONAL_HPP
