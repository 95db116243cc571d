#include "relsim/subgroup.hpp"

#include <array>

namespace relsim {

RealSubgroupSpec RealSubgroupSpec::cyclic(Scalar a) {
  if (sign(a) <= 0) throw PreconditionError("cyclic generator must be > 0");
  return {Tag::Cyclic, std::move(a), {}};
}

RealSubgroupSpec RealSubgroupSpec::generated(std::vector<Scalar> gens) {
  std::vector<Scalar> kept;
  for (Scalar& g : gens)
    if (!g.is_zero()) kept.push_back(std::move(g));
  if (kept.empty()) return zero();
  return {Tag::Generated, Scalar(), std::move(kept)};
}

std::string to_string(SubgroupKind k) {
  switch (k) {
    case SubgroupKind::Zero: return "zero";
    case SubgroupKind::Cyclic: return "cyclic";
    case SubgroupKind::Dense: return "dense";
    case SubgroupKind::Full: return "full";
  }
  return "?";
}

namespace {

// Q-linear dependence of two generators, i.e. proportionality of their
// coefficient pairs (a1,b1), (a2,b2).
bool q_dependent(const Scalar& x, const Scalar& y) {
  return (x.a * y.b - x.b * y.a) == 0;
}

// Integer lattice in Z^2 kept as a (at most) two-row triangular basis
// [[d0, e], [0, d1]] with d0, d1 > 0. Rows are inserted one at a time and the
// basis is re-triangularized by the Euclidean algorithm; this is a tiny
// Hermite normal form, enough for exact membership tests.
struct Lattice2 {
  bool has_row0 = false;
  bool has_row1 = false;
  BigInt d0, e, d1;

  void insert(BigInt u, BigInt v) {
    if (u == 0 && v == 0) return;
    // Reduce (u, v) against row 0 until its first component vanishes.
    while (u != 0) {
      if (!has_row0) {
        if (u < 0) { u = -u; v = -v; }
        has_row0 = true;
        d0 = u;
        e = v;
        u = 0;
        v = 0; // fully consumed into row 0
        break;
      }
      if (u % d0 == 0) {
        const BigInt q = u / d0;
        u = 0;
        v -= q * e;
        break;
      }
      // gcd step: swap roles of (d0, e) and (u, v).
      const BigInt q = u / d0; // rounds toward zero; remainder may be negative
      u -= q * d0;
      v -= q * e;
      std::swap(u, d0);
      std::swap(v, e);
      if (d0 < 0) { d0 = -d0; e = -e; }
    }
    if (v == 0) return;
    if (v < 0) v = -v;
    if (!has_row1) {
      has_row1 = true;
      d1 = v;
    } else {
      d1 = gcd_int(d1, v);
    }
    normalize();
  }

  void normalize() {
    if (has_row0 && has_row1 && d1 != 0) {
      // Keep 0 <= e < d1 for a unique form (not required for membership,
      // but cheap and makes debugging output stable).
      BigInt q = e / d1;
      e -= q * d1;
      if (e < 0) e += d1;
    }
  }

  int rank() const { return (has_row0 ? 1 : 0) + (has_row1 ? 1 : 0); }

  bool contains(const BigInt& x, const BigInt& y) const {
    if (!has_row0) {
      if (x != 0) return false;
      if (!has_row1) return y == 0;
      return y % d1 == 0;
    }
    if (x % d0 != 0) return false;
    const BigInt n0 = x / d0;
    const BigInt rest = y - n0 * e;
    if (!has_row1) return rest == 0;
    return rest % d1 == 0;
  }
};

// Common denominator of the rational coefficients of a set of scalars.
BigInt common_denominator(const std::vector<Scalar>& xs, const Scalar& extra) {
  BigInt l = 1;
  for (const Scalar& x : xs) {
    l = lcm_int(l, denominator_of(x.a));
    l = lcm_int(l, denominator_of(x.b));
  }
  l = lcm_int(l, denominator_of(extra.a));
  l = lcm_int(l, denominator_of(extra.b));
  return l;
}

std::pair<BigInt, BigInt> scaled_coeffs(const Scalar& x, const BigInt& den) {
  const BigInt u = numerator_of(x.a) * (den / denominator_of(x.a));
  const BigInt v = numerator_of(x.b) * (den / denominator_of(x.b));
  return {u, v};
}

} // namespace

SubgroupClass classify_subgroup(const RealSubgroupSpec& s) {
  switch (s.tag) {
    case RealSubgroupSpec::Tag::Zero:
      return {SubgroupKind::Zero, Scalar()};
    case RealSubgroupSpec::Tag::Full:
      return {SubgroupKind::Full, Scalar()};
    case RealSubgroupSpec::Tag::Cyclic:
      return {SubgroupKind::Cyclic, s.cyclic_gen};
    case RealSubgroupSpec::Tag::Generated:
      break;
  }
  if (s.gens.empty()) return {SubgroupKind::Zero, Scalar()};
  const Scalar& first = s.gens.front();
  bool rank_one = true;
  for (const Scalar& g : s.gens)
    if (!q_dependent(first, g)) {
      rank_one = false;
      break;
    }
  if (!rank_one) return {SubgroupKind::Dense, Scalar()};
  // All generators are rational multiples q_i of the first one; the group is
  // gcd(q_i) * first * Z.
  Rational g(0);
  for (const Scalar& gi : s.gens) {
    const Scalar ratio = gi / first;
    // rank-one means the ratio is rational
    g = gcd_rational(g, ratio.a);
  }
  Scalar generator = Scalar(g) * first;
  if (sign(generator) < 0) generator = -generator;
  return {SubgroupKind::Cyclic, generator};
}

bool subgroup_contains(const RealSubgroupSpec& s, const Scalar& h) {
  switch (s.tag) {
    case RealSubgroupSpec::Tag::Zero:
      return h.is_zero();
    case RealSubgroupSpec::Tag::Full:
      return true;
    case RealSubgroupSpec::Tag::Cyclic: {
      const Scalar q = h / s.cyclic_gen;
      return scalar_is_rational(q) && is_integer(q.a);
    }
    case RealSubgroupSpec::Tag::Generated: {
      const BigInt den = common_denominator(s.gens, h);
      Lattice2 lat;
      for (const Scalar& g : s.gens) {
        auto [u, v] = scaled_coeffs(g, den);
        lat.insert(u, v);
      }
      auto [x, y] = scaled_coeffs(h, den);
      return lat.contains(x, y);
    }
  }
  return false;
}

RealSubgroupSpec parse_subgroup(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (c != ' ' && c != '\t') compact.push_back(c);
  if (compact == "zero") return RealSubgroupSpec::zero();
  if (compact == "full") return RealSubgroupSpec::full();
  if (compact.rfind("cyclic:", 0) == 0)
    return RealSubgroupSpec::cyclic(parse_scalar(compact.substr(7)));
  if (compact.rfind("gen:", 0) == 0) {
    std::vector<Scalar> gens;
    std::string_view body(compact);
    body.remove_prefix(4);
    size_t start = 0;
    for (size_t i = 0; i <= body.size(); ++i) {
      if (i == body.size() || body[i] == ';') {
        if (i > start) gens.push_back(parse_scalar(body.substr(start, i - start)));
        start = i + 1;
      }
    }
    if (gens.empty()) throw ParseError("empty generator list in subgroup spec");
    return RealSubgroupSpec::generated(std::move(gens));
  }
  throw ParseError("invalid subgroup spec '" + std::string(text) + "'");
}

std::string format_subgroup(const RealSubgroupSpec& s) {
  switch (s.tag) {
    case RealSubgroupSpec::Tag::Zero: return "zero";
    case RealSubgroupSpec::Tag::Full: return "full";
    case RealSubgroupSpec::Tag::Cyclic: return "cyclic:" + format_scalar_compact(s.cyclic_gen);
    case RealSubgroupSpec::Tag::Generated: {
      std::string out = "gen:";
      for (size_t i = 0; i < s.gens.size(); ++i) {
        if (i) out += ';';
        out += format_scalar_compact(s.gens[i]);
      }
      return out;
    }
  }
  return "?";
}

} // namespace relsim
