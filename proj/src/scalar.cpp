#include "relsim/scalar.hpp"

#include <cmath>
#include <ostream>

namespace relsim {

int sign(const Scalar& x) {
  const int sa = sign_of(x.a);
  const int sb = sign_of(x.b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Terms disagree: |a| vs |b|*sqrt(2) decided by a^2 vs 2 b^2. Equality is
  // impossible for nonzero rationals (sqrt 2 is irrational).
  const Rational lhs = x.a * x.a;
  const Rational rhs = 2 * x.b * x.b;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * inverse(y); }

Scalar inverse(const Scalar& x) {
  if (x.is_zero()) throw DomainError("division by zero in Q(sqrt2)");
  const Rational n = field_norm(x);
  return Scalar(x.a / n, -x.b / n);
}

bool scalar_sqrt(const Scalar& x, Scalar& out) {
  const int s = sign(x);
  if (s < 0) return false;
  if (s == 0) {
    out = Scalar();
    return true;
  }
  if (x.b == 0) {
    Rational r;
    if (rational_sqrt(x.a, r)) { // sqrt rational
      out = Scalar(r);
      return true;
    }
    if (rational_sqrt(x.a / 2, r)) { // sqrt = r * sqrt2
      out = Scalar(Rational(0), r);
      return true;
    }
    return false;
  }
  // (p + q r)^2 = p^2 + 2 q^2 + 2 p q r: solve p^2 + 2 q^2 = a, 2 p q = b.
  // Substituting q = b/(2p): p^2 = (a +- sqrt(a^2 - 2 b^2)) / 2.
  Rational disc_root;
  if (!rational_sqrt(x.a * x.a - 2 * x.b * x.b, disc_root)) return false;
  for (int branch = 0; branch < 2; ++branch) {
    const Rational p2 =
        branch == 0 ? Rational((x.a + disc_root) / 2) : Rational((x.a - disc_root) / 2);
    Rational p;
    if (p2 > 0 && rational_sqrt(p2, p)) {
      const Rational q = x.b / (2 * p);
      Scalar candidate(p, q);
      if (sign(candidate) < 0) candidate = -candidate;
      if (candidate * candidate == x) {
        out = candidate;
        return true;
      }
    }
  }
  return false;
}

namespace {

std::string strip_spaces(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  return s;
}

// R = [-]digits[/digits], consumed greedily from the front of `s`.
std::string_view take_rational_token(std::string_view& s) {
  size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  size_t digits_start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == digits_start) return {};
  if (i < s.size() && s[i] == '/') {
    ++i;
    size_t den_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_start) return {};
  }
  std::string_view token = s.substr(0, i);
  s.remove_prefix(i);
  return token;
}

} // namespace

Scalar parse_scalar(std::string_view text) {
  const std::string compact = strip_spaces(text);
  std::string_view s = compact;
  if (s.empty()) throw ParseError("empty scalar literal");
  std::string_view first = take_rational_token(s);
  if (first.empty())
    throw ParseError("invalid scalar literal: '" + std::string(text) + "'");
  const Rational a = parse_rational(first);
  if (s.empty()) return Scalar(a);
  if (s.front() != '+' && s.front() != '-')
    throw ParseError("invalid scalar literal: '" + std::string(text) + "'");
  const bool minus = s.front() == '-';
  s.remove_prefix(1);
  std::string_view second = take_rational_token(s);
  if (second.empty())
    throw ParseError("invalid scalar literal (bad sqrt2 coefficient): '" +
                     std::string(text) + "'");
  Rational b = parse_rational(second);
  if (b < 0)
    throw ParseError("invalid scalar literal (sign belongs before the coefficient): '" +
                     std::string(text) + "'");
  if (minus) b = -b;
  if (s != "*r2")
    throw ParseError("invalid scalar literal (expected '*r2'): '" + std::string(text) + "'");
  return Scalar(a, b);
}

std::string format_scalar(const Scalar& x) {
  if (x.b == 0) return format_rational(x.a);
  std::string s = format_rational(x.a);
  s += x.b > 0 ? " + " : " - ";
  s += format_rational(rational_abs(x.b));
  s += "*r2";
  return s;
}

std::string format_scalar_compact(const Scalar& x) {
  if (x.b == 0) return format_rational(x.a);
  std::string s = format_rational(x.a);
  s += x.b > 0 ? "+" : "-";
  s += format_rational(rational_abs(x.b));
  s += "*r2";
  return s;
}

double to_double(const Scalar& x) {
  return to_double(x.a) + to_double(x.b) * std::sqrt(2.0);
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) {
  return os << format_scalar(x);
}

} // namespace relsim
