#include "relsim/coords.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <vector>

#include "relsim/groups.hpp"

namespace relsim {

InertialCoords::InertialCoords(Scalar lam_, Vec3 k_, Mat3 a_, MetricParams m_)
    : lam(std::move(lam_)), k(std::move(k_)), a(std::move(a_)), m(std::move(m_)) {
  if (sign(lam) <= 0) throw PreconditionError("coordinate scale must be > 0");
  if (!is_orthogonal(a)) throw PreconditionError("coordinate rotation must be orthogonal");
  const Scalar c2 = m.lambda * m.lambda;
  if (sign(Scalar(1) - norm2(k) * c2) <= 0)
    throw PreconditionError("synchrony vector must satisfy |k| < 1/c");
}

InertialCoords InertialCoords::identity(MetricParams m) {
  return InertialCoords(Scalar(1), Vec3(), Mat3::identity(), std::move(m));
}

Event to_prime(const InertialCoords& phi, const Event& p) {
  const Vec3 ar = phi.a * p.x.spatial();
  const Vec3 r_prime = phi.lam * ar;
  const Scalar t_prime = phi.lam * (p.x.time() + dot(phi.k, ar));
  return Event(Vec4(r_prime, t_prime));
}

Event from_prime(const InertialCoords& phi, const Event& p_prime) {
  const Scalar inv_lam = inverse(phi.lam);
  const Vec3 r_prime = p_prime.x.spatial();
  const Vec3 r = transpose(phi.a) * (inv_lam * r_prime);
  const Scalar t = inv_lam * (p_prime.x.time() - dot(phi.k, r_prime));
  return Event(Vec4(r, t));
}

namespace {

void require_unit(const Vec3& n) {
  if (norm2(n) != Scalar(1))
    throw PreconditionError("direction must be an exact unit vector");
}

} // namespace

Scalar one_way_speed(const InertialCoords& phi, const Vec3& n) {
  require_unit(n);
  const Scalar& c = phi.m.lambda;
  return c / (Scalar(1) + c * dot(phi.k, phi.a * n));
}

Scalar two_way_speed(const InertialCoords& phi, const Vec3& n) {
  const Scalar v_fwd = one_way_speed(phi, n);
  const Scalar v_back = one_way_speed(phi, -n);
  return Scalar(2) / (inverse(v_fwd) + inverse(v_back));
}

bool m_connectible(const InertialCoords& phi, const Event& p, const Event& q) {
  const Vec4 d = to_prime(phi, q) - to_prime(phi, p);
  return is_causal_future(causal_class(d, phi.m));
}

namespace {

// |v| <= c (1 + k . A v) fails exactly: either the right side is
// nonpositive while v != 0, or both sides are positive and the squares
// compare strictly.
bool violates_causality_bound(const InertialCoords& phi, const Vec3& v) {
  const Scalar& c = phi.m.lambda;
  const Scalar rhs = c * (Scalar(1) + dot(phi.k, phi.a * v));
  if (sign(rhs) <= 0) return !v.is_zero();
  return sign(norm2(v) - rhs * rhs) > 0;
}

// Exactly-unit rational directions: axes plus sign/permutation variants of
// a few Pythagorean quadruples. Dense enough for the open violation region.
std::vector<Vec3> rational_unit_directions() {
  std::vector<Vec3> dirs;
  auto add_all = [&](const Rational& x, const Rational& y, const Rational& z) {
    const std::array<Rational, 3> base{x, y, z};
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end());
    do {
      for (int sx = -1; sx <= 1; sx += 2)
        for (int sy = -1; sy <= 1; sy += 2)
          for (int sz = -1; sz <= 1; sz += 2) {
            Vec3 v(Scalar(sx * base[static_cast<size_t>(idx[0])]),
                   Scalar(sy * base[static_cast<size_t>(idx[1])]),
                   Scalar(sz * base[static_cast<size_t>(idx[2])]));
            if (norm2(v) == Scalar(1)) dirs.push_back(v);
          }
    } while (std::next_permutation(idx.begin(), idx.end()));
  };
  add_all(1, 0, 0);
  add_all(Rational(3, 5), Rational(4, 5), 0);
  add_all(Rational(1, 3), Rational(2, 3), Rational(2, 3));
  add_all(Rational(2, 7), Rational(3, 7), Rational(6, 7));
  add_all(Rational(1, 9), Rational(4, 9), Rational(8, 9));
  add_all(Rational(2, 11), Rational(6, 11), Rational(9, 11));
  add_all(Rational(3, 13), Rational(4, 13), Rational(12, 13));
  return dirs;
}

} // namespace

std::optional<Vec3> causality_witness(const InertialCoords& phi) {
  if (phi.k.is_zero()) return std::nullopt;
  const Scalar& c = phi.m.lambda;
  const Vec3 w = transpose(phi.a) * phi.k;
  Scalar w_norm;
  if (scalar_sqrt(norm2(w), w_norm)) {
    const Vec3 v = (-(c / w_norm)) * w;
    if (violates_causality_bound(phi, v)) return v;
  }
  for (const Vec3& n : rational_unit_directions()) {
    const Vec3 v = c * n;
    if (violates_causality_bound(phi, v)) return v;
  }
  // Unreachable for k != 0: some +-axis direction opposes A^T k.
  throw std::logic_error("causality witness search failed for nonzero k");
}

Mat4 lightcone_image(const InertialCoords& phi) {
  // |r'|^2 - c^2 (t' - k . r')^2 expanded into a symmetric matrix in the
  // coordinates (r'1, r'2, r'3, t').
  const Scalar c2 = phi.m.lambda * phi.m.lambda;
  Mat4 q;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      q.at(i, j) = (i == j ? Scalar(1) : Scalar(0)) - c2 * phi.k[i] * phi.k[j];
    }
    q.at(i, 3) = c2 * phi.k[i];
    q.at(3, i) = c2 * phi.k[i];
  }
  q.at(3, 3) = -c2;
  return q;
}

InertialCoords parse_coords(const std::string& text) {
  std::istringstream ss(text);
  std::map<std::string, std::string> kv;
  std::string tok;
  bool first = true;
  while (ss >> tok) {
    if (first && tok == "coords") {
      first = false;
      continue;
    }
    first = false;
    const size_t eq = tok.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected key=value in coords spec, got '" + tok + "'");
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  auto need = [&](const std::string& key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError("coords spec requires " + key + "=...");
    return it->second;
  };
  const Scalar lam = parse_scalar(need("lambda"));
  const Vec3 k = parse_vec3(need("k"));
  const std::string& a_spec = need("A");
  Mat3 a;
  if (a_spec == "identity") {
    a = Mat3::identity();
  } else if (a_spec.rfind("cayley(", 0) == 0 && a_spec.back() == ')') {
    const Vec3 p = parse_vec3("(" + a_spec.substr(7));
    a = rotation_cayley3(p[0], p[1], p[2]);
  } else {
    throw ParseError("coords spec A must be identity or cayley(p1,p2,p3)");
  }
  const MetricParams m(parse_scalar(need("c")));
  return InertialCoords(lam, k, a, m);
}

} // namespace relsim
