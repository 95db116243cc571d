#ifndef RELSIM_LINALG_HPP
#define RELSIM_LINALG_HPP

#include <array>
#include <string>
#include <string_view>

#include "relsim/scalar.hpp"

namespace relsim {

struct Vec3 {
  std::array<Scalar, 3> c{};

  Vec3() = default;
  Vec3(Scalar x, Scalar y, Scalar z) : c{std::move(x), std::move(y), std::move(z)} {}

  Scalar& operator[](int i) { return c[static_cast<size_t>(i)]; }
  const Scalar& operator[](int i) const { return c[static_cast<size_t>(i)]; }

  bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }

  friend bool operator==(const Vec3&, const Vec3&) = default;
  friend Vec3 operator+(const Vec3& u, const Vec3& v) {
    return Vec3(u[0] + v[0], u[1] + v[1], u[2] + v[2]);
  }
  friend Vec3 operator-(const Vec3& u, const Vec3& v) {
    return Vec3(u[0] - v[0], u[1] - v[1], u[2] - v[2]);
  }
  friend Vec3 operator-(const Vec3& u) { return Vec3(-u[0], -u[1], -u[2]); }
  friend Vec3 operator*(const Scalar& s, const Vec3& v) {
    return Vec3(s * v[0], s * v[1], s * v[2]);
  }
};

inline Scalar dot(const Vec3& u, const Vec3& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}
inline Scalar norm2(const Vec3& v) { return dot(v, v); }

// Spatial components first, time component last: (x1, x2, x3, x4) with x4 in
// time units.
struct Vec4 {
  std::array<Scalar, 4> c{};

  Vec4() = default;
  Vec4(Scalar x1, Scalar x2, Scalar x3, Scalar x4)
      : c{std::move(x1), std::move(x2), std::move(x3), std::move(x4)} {}
  Vec4(const Vec3& spatial, Scalar time)
      : c{spatial[0], spatial[1], spatial[2], std::move(time)} {}

  Scalar& operator[](int i) { return c[static_cast<size_t>(i)]; }
  const Scalar& operator[](int i) const { return c[static_cast<size_t>(i)]; }

  Vec3 spatial() const { return Vec3(c[0], c[1], c[2]); }
  const Scalar& time() const { return c[3]; }

  bool is_zero() const {
    return c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero();
  }

  friend bool operator==(const Vec4&, const Vec4&) = default;
  friend Vec4 operator+(const Vec4& u, const Vec4& v) {
    return Vec4(u[0] + v[0], u[1] + v[1], u[2] + v[2], u[3] + v[3]);
  }
  friend Vec4 operator-(const Vec4& u, const Vec4& v) {
    return Vec4(u[0] - v[0], u[1] - v[1], u[2] - v[2], u[3] - v[3]);
  }
  friend Vec4 operator-(const Vec4& u) { return Vec4(-u[0], -u[1], -u[2], -u[3]); }
  friend Vec4 operator*(const Scalar& s, const Vec4& v) {
    return Vec4(s * v[0], s * v[1], s * v[2], s * v[3]);
  }
};

inline Vec4 basis_e4() { return Vec4(Scalar(0), Scalar(0), Scalar(0), Scalar(1)); }

// A point of R^4. Differences of events are free Vec4 vectors and an event
// translated by a free vector is again an event.
struct Event {
  Vec4 x;

  Event() = default;
  explicit Event(Vec4 v) : x(std::move(v)) {}
  Event(Scalar x1, Scalar x2, Scalar x3, Scalar x4)
      : x(std::move(x1), std::move(x2), std::move(x3), std::move(x4)) {}

  const Scalar& operator[](int i) const { return x[i]; }

  friend bool operator==(const Event&, const Event&) = default;
  friend Vec4 operator-(const Event& p, const Event& q) { return p.x - q.x; }
  friend Event operator+(const Event& p, const Vec4& v) { return Event(p.x + v); }
};

inline Event origin_event() { return Event(); }

struct Vec4KeyLess {
  bool operator()(const Vec4& u, const Vec4& v) const {
    ScalarKeyLess less;
    for (int i = 0; i < 4; ++i) {
      if (less(u[i], v[i])) return true;
      if (less(v[i], u[i])) return false;
    }
    return false;
  }
};

struct Mat3 {
  // rows[i][j]
  std::array<std::array<Scalar, 3>, 3> m{};

  static Mat3 identity();

  Scalar& at(int i, int j) { return m[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
  const Scalar& at(int i, int j) const {
    return m[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }

  friend bool operator==(const Mat3&, const Mat3&) = default;
};

Mat3 operator*(const Mat3& a, const Mat3& b);
Vec3 operator*(const Mat3& a, const Vec3& v);
Mat3 transpose(const Mat3& a);
Scalar det(const Mat3& a);
bool is_special_orthogonal(const Mat3& a); // A^T A = I and det A = 1
bool is_orthogonal(const Mat3& a);         // A^T A = I

struct Mat4 {
  std::array<std::array<Scalar, 4>, 4> m{};

  static Mat4 identity();
  static Mat4 diagonal(const Scalar& d1, const Scalar& d2, const Scalar& d3,
                       const Scalar& d4);

  Scalar& at(int i, int j) { return m[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
  const Scalar& at(int i, int j) const {
    return m[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }

  friend bool operator==(const Mat4&, const Mat4&) = default;
};

Mat4 operator*(const Mat4& a, const Mat4& b);
Vec4 operator*(const Mat4& a, const Vec4& v);
Mat4 operator*(const Scalar& s, const Mat4& a);
Mat4 transpose(const Mat4& a);
Scalar det(const Mat4& a);
Mat4 inverse(const Mat4& a); // throws DomainError if singular

// x^T Q x for a (symmetric) form matrix Q.
Scalar quadratic_form(const Mat4& q, const Vec4& x);

// "(s1,s2,s3)" and "(s1,s2,s3,s4)" with scalar literals between commas.
Vec3 parse_vec3(std::string_view text);
Vec4 parse_vec4(std::string_view text);
std::string format_vec3(const Vec3& v);
std::string format_vec4(const Vec4& v);

} // namespace relsim

#endif
