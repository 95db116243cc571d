#ifndef RELSIM_SCALAR_HPP
#define RELSIM_SCALAR_HPP

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "relsim/rational.hpp"

namespace relsim {

// Element of the real quadratic field Q(sqrt 2), stored as a + b*sqrt(2)
// with both coefficients in canonical rational form. The representation is
// unique, so componentwise equality decides value equality. Sums, products
// and inverses of nonzero elements stay in the field, which keeps every
// geometric predicate in this project decidable without tolerances.
struct Scalar {
  Rational a;
  Rational b;

  Scalar() : a(0), b(0) {}
  Scalar(int v) : a(v), b(0) {}           // NOLINT: implicit by design
  Scalar(Rational v) : a(std::move(v)), b(0) {}
  Scalar(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}

  static Scalar sqrt2() { return Scalar(Rational(0), Rational(1)); }

  bool is_zero() const { return a == 0 && b == 0; }

  friend bool operator==(const Scalar& x, const Scalar& y) = default;

  friend Scalar operator+(const Scalar& x, const Scalar& y) {
    return Scalar(x.a + y.a, x.b + y.b);
  }
  friend Scalar operator-(const Scalar& x, const Scalar& y) {
    return Scalar(x.a - y.a, x.b - y.b);
  }
  friend Scalar operator-(const Scalar& x) { return Scalar(-x.a, -x.b); }
  friend Scalar operator*(const Scalar& x, const Scalar& y) {
    // (a1 + b1 r)(a2 + b2 r) = a1 a2 + 2 b1 b2 + (a1 b2 + b1 a2) r
    return Scalar(x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a);
  }
  friend Scalar operator/(const Scalar& x, const Scalar& y);

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
};

// Exact sign of a + b*sqrt(2), decided in rational arithmetic only. When the
// two terms disagree in sign, the dominating one is found by comparing a^2
// against 2 b^2.
int sign(const Scalar& x);

// Conjugate a - b*sqrt(2); the field norm x * conj(x) = a^2 - 2 b^2 is
// rational and vanishes only at zero.
inline Scalar conjugate(const Scalar& x) { return Scalar(x.a, -x.b); }
inline Rational field_norm(const Scalar& x) { return x.a * x.a - 2 * x.b * x.b; }

Scalar inverse(const Scalar& x); // throws DomainError on zero

inline bool scalar_is_rational(const Scalar& x) { return x.b == 0; }

inline bool operator<(const Scalar& x, const Scalar& y) { return sign(x - y) < 0; }
inline bool operator>(const Scalar& x, const Scalar& y) { return sign(x - y) > 0; }
inline bool operator<=(const Scalar& x, const Scalar& y) { return sign(x - y) <= 0; }
inline bool operator>=(const Scalar& x, const Scalar& y) { return sign(x - y) >= 0; }

inline Scalar abs(const Scalar& x) { return sign(x) < 0 ? -x : x; }

// Exact square root within the field, when one exists.
bool scalar_sqrt(const Scalar& x, Scalar& out);

// Lexicographic key order on (a, b); used for map keys, unrelated to the
// value order above.
struct ScalarKeyLess {
  bool operator()(const Scalar& x, const Scalar& y) const {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
};

// Literal grammar: R | R + R*r2 | R - R*r2, with R = [-]digits[/digits].
// Whitespace is insignificant anywhere in the literal.
Scalar parse_scalar(std::string_view text);
std::string format_scalar(const Scalar& x);

// Same literal without any whitespace; the form used inside
// whitespace-delimited file formats.
std::string format_scalar_compact(const Scalar& x);

// Floating approximation; used only by the explicitly labeled float oracles
// and never in a pass/fail decision.
double to_double(const Scalar& x);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

} // namespace relsim

#endif
