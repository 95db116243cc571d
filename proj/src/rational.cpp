#include "relsim/rational.hpp"

#include <boost/multiprecision/integer.hpp>
#include <cctype>

namespace relsim {

BigInt gcd_int(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

BigInt lcm_int(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

Rational gcd_rational(const Rational& a, const Rational& b) {
  // gcd(p1/q1, p2/q2) = gcd(p1*L/q1, p2*L/q2) / L with L = lcm(q1, q2).
  if (a == 0) return rational_abs(b);
  if (b == 0) return rational_abs(a);
  const BigInt l = lcm_int(denominator_of(a), denominator_of(b));
  const BigInt na = numerator_of(a) * (l / denominator_of(a));
  const BigInt nb = numerator_of(b) * (l / denominator_of(b));
  return Rational(gcd_int(na, nb), l);
}

bool rational_sqrt(const Rational& r, Rational& out) {
  if (r < 0) return false;
  if (r == 0) {
    out = 0;
    return true;
  }
  const BigInt n = numerator_of(r);
  const BigInt d = denominator_of(r);
  const BigInt sn = boost::multiprecision::sqrt(n);
  const BigInt sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return false;
  out = Rational(sn, sd);
  return true;
}

Rational parse_rational(std::string_view text) {
  const std::string_view original = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  auto take_digits = [&](std::string& dst) {
    while (!text.empty() && std::isdigit(static_cast<unsigned char>(text.front()))) {
      dst.push_back(text.front());
      text.remove_prefix(1);
    }
  };
  std::string num_digits;
  take_digits(num_digits);
  if (num_digits.empty())
    throw ParseError("invalid rational literal: '" + std::string(original) + "'");
  std::string den_digits = "1";
  if (!text.empty() && text.front() == '/') {
    text.remove_prefix(1);
    den_digits.clear();
    take_digits(den_digits);
    if (den_digits.empty())
      throw ParseError("invalid rational literal (missing denominator): '" +
                       std::string(original) + "'");
  }
  if (!text.empty())
    throw ParseError("trailing characters in rational literal: '" + std::string(original) + "'");
  BigInt num(num_digits);
  BigInt den(den_digits);
  if (den == 0)
    throw ParseError("zero denominator in rational literal: '" + std::string(original) + "'");
  if (negative) num = -num;
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  std::string s = numerator_of(r).str();
  if (!is_integer(r)) {
    s += '/';
    s += denominator_of(r).str();
  }
  return s;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace relsim
