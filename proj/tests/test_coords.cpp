#include <doctest.h>

#include <random>

#include "relsim/coords.hpp"
#include "relsim/groups.hpp"

using namespace relsim;

namespace {

const MetricParams kUnit(Scalar(1));

Event ev(int x1, int x2, int x3, int x4) {
  return Event(Scalar(x1), Scalar(x2), Scalar(x3), Scalar(x4));
}

InertialCoords half_k() {
  return InertialCoords(Scalar(1), Vec3(Scalar(Rational(1, 2)), Scalar(0), Scalar(0)),
                        Mat3::identity(), kUnit);
}

// sign/permutation pool of exactly-unit rational directions
std::vector<Vec3> unit_pool() {
  return {
      Vec3(Scalar(1), Scalar(0), Scalar(0)),
      Vec3(Scalar(0), Scalar(-1), Scalar(0)),
      Vec3(Scalar(0), Scalar(0), Scalar(1)),
      Vec3(Scalar(Rational(3, 5)), Scalar(Rational(4, 5)), Scalar(0)),
      Vec3(Scalar(Rational(-3, 5)), Scalar(0), Scalar(Rational(4, 5))),
      Vec3(Scalar(Rational(1, 3)), Scalar(Rational(2, 3)), Scalar(Rational(2, 3))),
      Vec3(Scalar(Rational(2, 7)), Scalar(Rational(-3, 7)), Scalar(Rational(6, 7))),
      Vec3(Scalar(Rational(1, 9)), Scalar(Rational(4, 9)), Scalar(Rational(8, 9))),
      Vec3(Scalar(Rational(2, 11)), Scalar(Rational(6, 11)), Scalar(Rational(-9, 11))),
      Vec3(Scalar(Rational(3, 13)), Scalar(Rational(4, 13)), Scalar(Rational(12, 13))),
  };
}

} // namespace

TEST_CASE("construction validates the invariants") {
  CHECK_THROWS_AS(InertialCoords(Scalar(0), Vec3(), Mat3::identity(), kUnit),
                  PreconditionError);
  // |k| must stay below 1/c
  CHECK_THROWS_AS(InertialCoords(Scalar(1), Vec3(Scalar(1), Scalar(0), Scalar(0)),
                                 Mat3::identity(), kUnit),
                  PreconditionError);
  CHECK_THROWS_AS(InertialCoords(Scalar(1), Vec3(Scalar(Rational(1, 2)), Scalar(0), Scalar(0)),
                                 Mat3::identity(), MetricParams(Scalar(2))),
                  PreconditionError);
  Mat3 bad = Mat3::identity();
  bad.at(0, 1) = Scalar(1);
  CHECK_THROWS_AS(InertialCoords(Scalar(1), Vec3(), bad, kUnit), PreconditionError);
  // a valid boosted-synchrony system
  CHECK_NOTHROW(half_k());
}

TEST_CASE("transition function: documented examples") {
  const InertialCoords id = InertialCoords::identity(kUnit);
  CHECK(to_prime(id, ev(1, -2, 3, 4)) == ev(1, -2, 3, 4));
  const InertialCoords phi = half_k();
  CHECK(to_prime(phi, ev(1, 0, 0, 0)) ==
        Event(Scalar(1), Scalar(0), Scalar(0), Scalar(Rational(1, 2))));
}

TEST_CASE("round trip inversion on random events") {
  std::mt19937_64 rng(3);
  auto rs = [&] {
    return Scalar(Rational(static_cast<long long>(rng() % 13) - 6,
                           static_cast<long long>(rng() % 3) + 1));
  };
  const InertialCoords phi(Scalar(Rational(3, 2)),
                           Vec3(Scalar(Rational(1, 3)), Scalar(Rational(1, 4)), Scalar(0)),
                           rotation_cayley3(Scalar(Rational(1, 2)), Scalar(0), Scalar(1)),
                           kUnit);
  for (int t = 0; t < 200; ++t) {
    const Event p(rs(), rs(), rs(), rs());
    CHECK(from_prime(phi, to_prime(phi, p)) == p);
    CHECK(to_prime(phi, from_prime(phi, p)) == p);
  }
}

TEST_CASE("one-way speeds: documented examples") {
  const InertialCoords phi = half_k();
  const Vec3 plus_x(Scalar(1), Scalar(0), Scalar(0));
  CHECK(one_way_speed(phi, plus_x) == Scalar(Rational(2, 3)));
  CHECK(one_way_speed(phi, -plus_x) == Scalar(2));
  // k = 0 is isotropic
  const InertialCoords id = InertialCoords::identity(kUnit);
  for (const Vec3& n : unit_pool()) CHECK(one_way_speed(id, n) == Scalar(1));
  CHECK_THROWS_AS(one_way_speed(phi, Vec3(Scalar(1), Scalar(1), Scalar(0))),
                  PreconditionError);
}

TEST_CASE("two-way speed is exactly c for every valid system") {
  const InertialCoords phi = half_k();
  CHECK(two_way_speed(phi, Vec3(Scalar(1), Scalar(0), Scalar(0))) == Scalar(1));
  std::mt19937_64 rng(9);
  auto rnum = [&](int lo, int hi) {
    return static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1)) + lo;
  };
  const auto pool = unit_pool();
  int tested = 0;
  while (tested < 100) {
    const Scalar lam(Rational(rnum(1, 5), rnum(1, 3)));
    const Vec3 k(Scalar(Rational(rnum(-2, 2), 7)), Scalar(Rational(rnum(-2, 2), 7)),
                 Scalar(Rational(rnum(-2, 2), 7)));
    const Mat3 a = rotation_cayley3(Scalar(Rational(rnum(-2, 2), 3)),
                                    Scalar(Rational(rnum(-2, 2), 3)),
                                    Scalar(Rational(rnum(-2, 2), 3)));
    const MetricParams m(Scalar(Rational(rnum(1, 3), 1)));
    if (sign(Scalar(1) - norm2(k) * m.lambda * m.lambda) <= 0) continue;
    const InertialCoords sys(lam, k, a, m);
    const Vec3& n = pool[static_cast<size_t>(tested) % pool.size()];
    CHECK(two_way_speed(sys, n) == m.lambda);
    ++tested;
  }
}

TEST_CASE("m-connectibility matches the causal order for identity coordinates") {
  const InertialCoords id = InertialCoords::identity(kUnit);
  std::mt19937_64 rng(15);
  auto rs = [&] {
    return Scalar(Rational(static_cast<long long>(rng() % 9) - 4,
                           static_cast<long long>(rng() % 2) + 1));
  };
  for (int t = 0; t < 300; ++t) {
    const Event p(rs(), rs(), rs(), rs());
    const Event q(rs(), rs(), rs(), rs());
    if (p == q) continue;
    CHECK(m_connectible(id, p, q) == (causal_order(p, q, kUnit) && !(p == q)));
  }
}

TEST_CASE("the skewed system drops a null-connectible pair") {
  const InertialCoords phi = half_k();
  const Event p = ev(0, 0, 0, 0);
  const Event q = ev(-1, 0, 0, 1);
  CHECK(m_connectible(InertialCoords::identity(kUnit), p, q));
  CHECK(to_prime(phi, q) ==
        Event(Scalar(-1), Scalar(0), Scalar(0), Scalar(Rational(1, 2))));
  CHECK_FALSE(m_connectible(phi, p, q));
  // the worldline along r = 0 is untouched
  CHECK(m_connectible(phi, p, ev(0, 0, 0, 1)));
}

TEST_CASE("causality witness") {
  CHECK_FALSE(causality_witness(InertialCoords::identity(kUnit)).has_value());
  const auto w = causality_witness(half_k());
  REQUIRE(w.has_value());
  CHECK(*w == Vec3(Scalar(-1), Scalar(0), Scalar(0)));
  // rotated synchrony vector: the witness still violates the bound exactly
  const InertialCoords rot(Scalar(1), Vec3(Scalar(0), Scalar(Rational(1, 2)), Scalar(0)),
                           rotation_cayley3(Scalar(0), Scalar(0), Scalar(1)), kUnit);
  const auto w2 = causality_witness(rot);
  REQUIRE(w2.has_value());
  const Scalar rhs = Scalar(1) * (Scalar(1) + dot(rot.k, rot.a * *w2));
  const bool violated = sign(rhs) <= 0 || sign(norm2(*w2) - rhs * rhs) > 0;
  CHECK(violated);
  CHECK(norm2(*w2) == Scalar(1));
  // irrational |k|: falls back to the rational direction search
  const InertialCoords odd(Scalar(1),
                           Vec3(Scalar(Rational(1, 3)), Scalar(Rational(1, 4)), Scalar(0)),
                           Mat3::identity(), kUnit);
  const auto w3 = causality_witness(odd);
  REQUIRE(w3.has_value());
  const Scalar rhs3 = Scalar(1) + dot(odd.k, odd.a * *w3);
  CHECK((sign(rhs3) <= 0 || sign(norm2(*w3) - rhs3 * rhs3) > 0));
}

TEST_CASE("light cone image quadric") {
  const InertialCoords id = InertialCoords::identity(kUnit);
  CHECK(lightcone_image(id) == kUnit.form_matrix());
  const MetricParams c2(Scalar(2));
  CHECK(lightcone_image(InertialCoords::identity(c2)) == c2.form_matrix());
  // cross terms appear with nonzero k and the image of any null vector lies
  // on the quadric
  std::mt19937_64 rng(25);
  auto rs = [&] {
    return Scalar(Rational(static_cast<long long>(rng() % 9) - 4,
                           static_cast<long long>(rng() % 3) + 1));
  };
  const InertialCoords phi(Scalar(Rational(5, 4)),
                           Vec3(Scalar(Rational(1, 2)), Scalar(0), Scalar(0)),
                           rotation_cayley3(Scalar(0), Scalar(Rational(1, 3)), Scalar(0)),
                           kUnit);
  const Mat4 q = lightcone_image(phi);
  CHECK(q.at(0, 3) == Scalar(Rational(1, 2)));
  CHECK(q == transpose(q));
  int nulls = 0;
  for (int t = 0; t < 500; ++t) {
    // exact null vectors from Pythagorean spatial parts
    const Scalar a = rs();
    const Scalar b = rs();
    Vec3 sp(a * a - b * b, Scalar(2) * a * b, Scalar(0));
    Scalar tt = a * a + b * b;
    const Vec4 v(sp, tt);
    if (v.is_zero()) continue;
    REQUIRE(causal_class(v, kUnit) != CausalClass::Spacelike);
    const Event image = to_prime(phi, Event(v));
    CHECK(quadratic_form(q, image.x) == Scalar(0));
    ++nulls;
  }
  CHECK(nulls > 100);
}

TEST_CASE("coords text format") {
  const InertialCoords phi =
      parse_coords("coords lambda=1 k=(1/2,0,0) A=cayley(0,0,0) c=1");
  CHECK(phi.lam == Scalar(1));
  CHECK(phi.k == Vec3(Scalar(Rational(1, 2)), Scalar(0), Scalar(0)));
  CHECK(phi.a == Mat3::identity());
  const InertialCoords rot = parse_coords("lambda=3/2 k=(0,0,1/3) A=cayley(0,0,1) c=2");
  CHECK(rot.m.lambda == Scalar(2));
  CHECK(rot.a == rotation_cayley3(Scalar(0), Scalar(0), Scalar(1)));
  CHECK_THROWS_AS(parse_coords("lambda=1 k=(0,0,0) c=1"), ParseError);
  CHECK_THROWS_AS(parse_coords("coords lambda=1 k=(1,0,0) A=identity c=1"),
                  PreconditionError);
}
