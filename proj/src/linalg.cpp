#include "relsim/linalg.hpp"

#include <vector>

namespace relsim {

Mat3 Mat3::identity() {
  Mat3 r;
  for (int i = 0; i < 3; ++i) r.at(i, i) = Scalar(1);
  return r;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Scalar acc;
      for (int k = 0; k < 3; ++k) acc += a.at(i, k) * b.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

Vec3 operator*(const Mat3& a, const Vec3& v) {
  Vec3 r;
  for (int i = 0; i < 3; ++i) {
    Scalar acc;
    for (int k = 0; k < 3; ++k) acc += a.at(i, k) * v[k];
    r[i] = acc;
  }
  return r;
}

Mat3 transpose(const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.at(i, j) = a.at(j, i);
  return r;
}

Scalar det(const Mat3& a) {
  return a.at(0, 0) * (a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1)) -
         a.at(0, 1) * (a.at(1, 0) * a.at(2, 2) - a.at(1, 2) * a.at(2, 0)) +
         a.at(0, 2) * (a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0));
}

bool is_orthogonal(const Mat3& a) { return transpose(a) * a == Mat3::identity(); }

bool is_special_orthogonal(const Mat3& a) {
  return is_orthogonal(a) && det(a) == Scalar(1);
}

Mat4 Mat4::identity() {
  Mat4 r;
  for (int i = 0; i < 4; ++i) r.at(i, i) = Scalar(1);
  return r;
}

Mat4 Mat4::diagonal(const Scalar& d1, const Scalar& d2, const Scalar& d3,
                    const Scalar& d4) {
  Mat4 r;
  r.at(0, 0) = d1;
  r.at(1, 1) = d2;
  r.at(2, 2) = d3;
  r.at(3, 3) = d4;
  return r;
}

Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Scalar acc;
      for (int k = 0; k < 4; ++k) acc += a.at(i, k) * b.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

Vec4 operator*(const Mat4& a, const Vec4& v) {
  Vec4 r;
  for (int i = 0; i < 4; ++i) {
    Scalar acc;
    for (int k = 0; k < 4; ++k) acc += a.at(i, k) * v[k];
    r[i] = acc;
  }
  return r;
}

Mat4 operator*(const Scalar& s, const Mat4& a) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.at(i, j) = s * a.at(i, j);
  return r;
}

Mat4 transpose(const Mat4& a) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.at(i, j) = a.at(j, i);
  return r;
}

namespace {

// Gauss-Jordan over the exact field; returns determinant, leaves `aug`
// holding the inverse when invert = true.
Scalar eliminate(Mat4 a, Mat4* inv_out) {
  Mat4 aug = Mat4::identity();
  Scalar d(1);
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    for (int row = col; row < 4; ++row)
      if (!a.at(row, col).is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) return Scalar(0);
    if (pivot != col) {
      std::swap(a.m[static_cast<size_t>(pivot)], a.m[static_cast<size_t>(col)]);
      std::swap(aug.m[static_cast<size_t>(pivot)], aug.m[static_cast<size_t>(col)]);
      d = -d;
    }
    const Scalar p = a.at(col, col);
    d *= p;
    const Scalar pinv = inverse(p);
    for (int j = 0; j < 4; ++j) {
      a.at(col, j) *= pinv;
      aug.at(col, j) *= pinv;
    }
    for (int row = 0; row < 4; ++row) {
      if (row == col || a.at(row, col).is_zero()) continue;
      const Scalar f = a.at(row, col);
      for (int j = 0; j < 4; ++j) {
        a.at(row, j) -= f * a.at(col, j);
        aug.at(row, j) -= f * aug.at(col, j);
      }
    }
  }
  if (inv_out) *inv_out = aug;
  return d;
}

} // namespace

Scalar det(const Mat4& a) { return eliminate(a, nullptr); }

Mat4 inverse(const Mat4& a) {
  Mat4 inv;
  if (eliminate(a, &inv).is_zero()) throw DomainError("singular 4x4 matrix");
  return inv;
}

Scalar quadratic_form(const Mat4& q, const Vec4& x) {
  Scalar acc;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) acc += x[i] * q.at(i, j) * x[j];
  return acc;
}

namespace {

std::vector<Scalar> parse_tuple(std::string_view text, size_t arity) {
  std::string compact;
  for (char c : text)
    if (c != ' ' && c != '\t') compact.push_back(c);
  if (compact.size() < 2 || compact.front() != '(' || compact.back() != ')')
    throw ParseError("expected parenthesized tuple, got '" + std::string(text) + "'");
  std::string_view body(compact);
  body.remove_prefix(1);
  body.remove_suffix(1);
  std::vector<Scalar> parts;
  size_t start = 0;
  for (size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || body[i] == ',') {
      parts.push_back(parse_scalar(body.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (parts.size() != arity)
    throw ParseError("expected " + std::to_string(arity) + " components in '" +
                     std::string(text) + "'");
  return parts;
}

} // namespace

Vec3 parse_vec3(std::string_view text) {
  auto p = parse_tuple(text, 3);
  return Vec3(p[0], p[1], p[2]);
}

Vec4 parse_vec4(std::string_view text) {
  auto p = parse_tuple(text, 4);
  return Vec4(p[0], p[1], p[2], p[3]);
}

std::string format_vec3(const Vec3& v) {
  return "(" + format_scalar(v[0]) + "," + format_scalar(v[1]) + "," +
         format_scalar(v[2]) + ")";
}

std::string format_vec4(const Vec4& v) {
  return "(" + format_scalar(v[0]) + "," + format_scalar(v[1]) + "," +
         format_scalar(v[2]) + "," + format_scalar(v[3]) + ")";
}

} // namespace relsim
