#ifndef RELSIM_RATIONAL_HPP
#define RELSIM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "relsim/errors.hpp"

namespace relsim {

// Arbitrary-precision integers and canonical-form rationals.
// cpp_rational keeps denominator > 0 and gcd(|num|, den) = 1 by itself,
// so every Rational value is its own canonical form.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& r) { return r.sign(); }

inline BigInt numerator_of(const Rational& r) {
  return boost::multiprecision::numerator(r);
}

inline BigInt denominator_of(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

BigInt gcd_int(const BigInt& a, const BigInt& b);
BigInt lcm_int(const BigInt& a, const BigInt& b);

// gcd over Q: the positive generator of Z*a + Z*b.
Rational gcd_rational(const Rational& a, const Rational& b);

// Exact square root when r is the square of a rational; nullopt-like via flag.
bool rational_sqrt(const Rational& r, Rational& out);

// Literal grammar: [-]digits[/digits]. Whitespace is not allowed here;
// callers strip it beforehand.
Rational parse_rational(std::string_view text);

// "n" when integral, otherwise "n/d".
std::string format_rational(const Rational& r);

double to_double(const Rational& r);

} // namespace relsim

#endif
