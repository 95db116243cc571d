#include <doctest.h>

#include <random>

#include "relsim/groups.hpp"

using namespace relsim;

namespace {

const MetricParams kUnit(Scalar(1));

Event ev(int x1, int x2, int x3, int x4) {
  return Event(Scalar(x1), Scalar(x2), Scalar(x3), Scalar(x4));
}

Scalar rs(std::mt19937_64& rng, int span = 4) {
  auto num = [&](int lo, int hi) {
    return static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1)) + lo;
  };
  return Scalar(Rational(num(-span, span), num(1, 3)));
}

Vec4 rv4(std::mt19937_64& rng) { return Vec4(rs(rng), rs(rng), rs(rng), rs(rng)); }
Vec3 rv3(std::mt19937_64& rng) { return Vec3(rs(rng), rs(rng), rs(rng)); }

// Rational boost parameters from a Pythagorean-style pair.
std::pair<Scalar, Scalar> rand_boost_params(std::mt19937_64& rng) {
  const long long mn = static_cast<long long>(rng() % 4) + 2;
  const long long nn = static_cast<long long>(rng() % (mn - 1)) + 1;
  const Rational den(mn * mn - nn * nn);
  return {Scalar(Rational(mn * mn + nn * nn) / den), Scalar(Rational(2 * mn * nn) / den)};
}

} // namespace

TEST_CASE("compose, invert, apply") {
  std::mt19937_64 rng(3);
  const Affine4 g = compose(rotation_cayley(rs(rng), rs(rng), rs(rng)),
                            translation(rv4(rng)));
  const Affine4 h = compose(galilei_boost(rv3(rng)), translation(rv4(rng)));
  const Event p = ev(1, -2, 3, 4);
  CHECK(apply(identity_affine(), p) == p);
  CHECK(apply(compose(g, h), p) == apply(g, apply(h, p)));
  CHECK(compose(g, affine_inverse(g)) == identity_affine());
  CHECK(compose(affine_inverse(h), h) == identity_affine());
  const Vec4 b = rv4(rng);
  CHECK(apply(translation(b), p) == p + b);
}

TEST_CASE("cayley rotations are exact special orthogonal matrices") {
  CHECK(rotation_cayley(Scalar(0), Scalar(0), Scalar(0)) == identity_affine());
  // quarter turn about z
  const Affine4 rz = rotation_cayley(Scalar(0), Scalar(0), Scalar(1));
  CHECK(apply(rz, ev(1, 0, 0, 0)) == ev(0, 1, 0, 0));
  CHECK(apply(rz, ev(0, 1, 0, 0)) == ev(-1, 0, 0, 0));
  CHECK(apply(rz, ev(0, 0, 5, 7)) == ev(0, 0, 5, 7));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Mat3 s = rotation_cayley3(rs(rng), rs(rng), rs(rng));
    CHECK(is_special_orthogonal(s));
  }
}

TEST_CASE("x boost") {
  const Affine4 b = boost_x(Scalar(Rational(5, 4)), Scalar(Rational(3, 4)), kUnit);
  CHECK(member(b, GroupId::proper_orthochronous_lorentz(kUnit)));
  const Vec4 image = apply_linear(b, basis_e4());
  CHECK(image == Vec4(Scalar(Rational(3, 4)), Scalar(0), Scalar(0), Scalar(Rational(5, 4))));
  CHECK(lorentz_form(image, image, kUnit) == lorentz_form(basis_e4(), basis_e4(), kUnit));
  CHECK(causal_class(image, kUnit) == CausalClass::TimelikeFuture);
  CHECK(boost_x(Scalar(1), Scalar(0), kUnit) == identity_affine());
  CHECK(compose(b, boost_x(Scalar(Rational(5, 4)), Scalar(Rational(-3, 4)), kUnit)) ==
        identity_affine());
  CHECK_THROWS_AS(boost_x(Scalar(2), Scalar(1), kUnit), PreconditionError);
  // keeps the form for a non-unit light speed as well
  const MetricParams c3(Scalar(3));
  CHECK(member(boost_x(Scalar(Rational(5, 4)), Scalar(Rational(3, 4)), c3),
               GroupId::proper_orthochronous_lorentz(c3)));
}

TEST_CASE("evident affine constructors") {
  CHECK(apply(time_inversion(), ev(1, 2, 3, 4)) == ev(1, 2, 3, -4));
  CHECK(apply(dilatation(Scalar(2)), ev(1, 0, 0, 1)) == ev(2, 0, 0, 2));
  CHECK(apply(galilei_boost(Vec3(Scalar(1), Scalar(0), Scalar(0))), ev(0, 0, 0, 1)) ==
        ev(1, 0, 0, 1));
  CHECK_THROWS_AS(dilatation(Scalar(0)), PreconditionError);
  CHECK_THROWS_AS(dilatation(Scalar(-1)), PreconditionError);
}

TEST_CASE("membership: documented examples") {
  const Affine4 theta = time_inversion();
  CHECK(member(theta, GroupId::lorentz(kUnit)));
  CHECK_FALSE(member(theta, GroupId::orthochronous_lorentz(kUnit)));
  const Affine4 gb = compose(rotation_cayley(Scalar(0), Scalar(0), Scalar(1)),
                             galilei_boost(Vec3(Scalar(1), Scalar(0), Scalar(0))));
  CHECK(member(gb, GroupId::galilei()));
  CHECK_FALSE(member(gb, GroupId::newton()));
  const Affine4 b = boost_x(Scalar(Rational(5, 4)), Scalar(Rational(3, 4)), kUnit);
  CHECK(member(b, GroupId::proper_orthochronous_lorentz(kUnit)));
}

TEST_CASE("membership hierarchy") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const Affine4 n = compose(rotation_cayley(rs(rng), rs(rng), rs(rng)),
                              translation(rv4(rng)));
    CHECK(member(n, GroupId::newton()));
    CHECK(member(n, GroupId::galilei()));
    const Affine4 g = compose(n, galilei_boost(rv3(rng)));
    CHECK(member(g, GroupId::galilei()));
  }
  // a nontrivial boost is Galilei but not Poincare, unless it is trivial
  const Affine4 gb = galilei_boost(Vec3(Scalar(1), Scalar(0), Scalar(0)));
  CHECK_FALSE(member(gb, GroupId::poincare(kUnit)));
}

TEST_CASE("group closure under products for every constructor family") {
  std::mt19937_64 rng(19);
  auto rand_rotation = [&] { return rotation_cayley(rs(rng), rs(rng), rs(rng)); };
  auto rand_newton = [&] { return compose(rand_rotation(), translation(rv4(rng))); };
  auto rand_galilei = [&] { return compose(rand_newton(), galilei_boost(rv3(rng))); };
  auto rand_lorentz = [&] {
    auto [g1, bg1] = rand_boost_params(rng);
    return compose(rand_rotation(), compose(boost_x(g1, bg1, kUnit), rand_rotation()));
  };
  auto rand_poincare = [&] { return compose(rand_lorentz(), translation(rv4(rng))); };
  auto rand_dil = [&] {
    const long long n = static_cast<long long>(rng() % 5) + 1;
    const long long d = static_cast<long long>(rng() % 5) + 1;
    return dilatation(Scalar(Rational(n, d)));
  };

  const int trials = 1000;
  for (int t = 0; t < trials; ++t) {
    switch (t % 5) {
      case 0: {
        const Affine4 p = compose(rand_newton(), rand_newton());
        CHECK(member(p, GroupId::newton()));
        CHECK(member(affine_inverse(p), GroupId::newton()));
        break;
      }
      case 1: {
        const Affine4 p = compose(rand_galilei(), rand_galilei());
        CHECK(member(p, GroupId::galilei()));
        CHECK(member(affine_inverse(p), GroupId::galilei()));
        break;
      }
      case 2: {
        const Affine4 p = compose(rand_lorentz(), rand_lorentz());
        CHECK(member(p, GroupId::proper_orthochronous_lorentz(kUnit)));
        break;
      }
      case 3: {
        const Affine4 p = compose(rand_poincare(), rand_poincare());
        CHECK(member(p, GroupId::orthochronous_proper_poincare(kUnit)));
        CHECK(member(affine_inverse(p), GroupId::orthochronous_proper_poincare(kUnit)));
        break;
      }
      case 4: {
        const Affine4 p = compose(rand_dil(), compose(rand_poincare(), rand_dil()));
        CHECK(member(p, GroupId::conformal_poincare(kUnit)));
        break;
      }
    }
  }
}

TEST_CASE("semidirect factorization is unique and recomposes") {
  std::mt19937_64 rng(29);
  auto rand_lorentz = [&] {
    auto [g1, bg1] = rand_boost_params(rng);
    return compose(rotation_cayley(rs(rng), rs(rng), rs(rng)), boost_x(g1, bg1, kUnit));
  };
  for (int t = 0; t < 100; ++t) {
    const Affine4 g = compose(rand_lorentz(), translation(rv4(rng)));
    // homogeneous part and translation part
    Affine4 hom = g;
    hom.translation = Vec4();
    const Affine4 tr = compose(affine_inverse(hom), g);
    CHECK(tr.linear == Mat4::identity());
    CHECK(member(tr, GroupId::translations()));
    CHECK(compose(hom, tr) == g);
  }
}

TEST_CASE("conformal memberships") {
  const Affine4 cn = compose(dilatation(Scalar(Rational(3, 2))),
                             rotation_cayley(Scalar(1), Scalar(0), Scalar(0)));
  CHECK(member(cn, GroupId::conformal_newton()));
  CHECK(member(cn, GroupId::conformal_galilei()));
  const Affine4 cg = compose(cn, galilei_boost(Vec3(Scalar(1), Scalar(2), Scalar(0))));
  CHECK_FALSE(member(cg, GroupId::conformal_newton()));
  CHECK(member(cg, GroupId::conformal_galilei()));
  const Affine4 cp = compose(dilatation(Scalar(2)),
                             boost_x(Scalar(Rational(5, 4)), Scalar(Rational(3, 4)), kUnit));
  CHECK(member(cp, GroupId::conformal_poincare(kUnit)));
  CHECK_FALSE(member(cp, GroupId::poincare(kUnit)));
}

TEST_CASE("rest isotropy membership") {
  const Affine4 b = boost_x(Scalar(Rational(5, 4)), Scalar(Rational(3, 4)), kUnit);
  const Vec4 u = apply_linear(b, basis_e4());
  const GroupId iso = GroupId::rest_isotropy(u, kUnit);
  // conjugated rotations fix u
  const Affine4 rot = rotation_cayley(Scalar(0), Scalar(0), Scalar(1));
  const Affine4 conj = compose(b, compose(rot, affine_inverse(b)));
  CHECK(member(conj, iso));
  std::mt19937_64 rng(1);
  CHECK(member(translation(rv4(rng)), iso)); // translations allowed
  CHECK_FALSE(member(rot, iso));
  // conformal: dilatations scale u positively
  CHECK(member(dilatation(Scalar(3)), GroupId::conformal_rest_isotropy(u, kUnit)));
  CHECK_FALSE(member(time_inversion(), GroupId::conformal_rest_isotropy(basis_e4(), kUnit)));
  CHECK_THROWS_AS(GroupId::rest_isotropy(Vec4(Scalar(1), Scalar(0), Scalar(0), Scalar(0)), kUnit),
                  PreconditionError);
}

TEST_CASE("line stabilizers") {
  const MetricParams m = kUnit;
  // isometric stabilizer: rotations, time inversion, e4 translations
  CHECK(member(time_inversion(), GroupId::line_stabilizer(m)));
  CHECK(member(translation(Scalar(3) * basis_e4()), GroupId::line_stabilizer(m)));
  CHECK(member(rotation_cayley(Scalar(1), Scalar(2), Scalar(0)), GroupId::line_stabilizer(m)));
  CHECK_FALSE(member(translation(Vec4(Scalar(1), Scalar(0), Scalar(0), Scalar(0))),
                     GroupId::line_stabilizer(m)));
  CHECK_FALSE(member(boost_x(Scalar(Rational(5, 4)), Scalar(Rational(3, 4)), m),
                     GroupId::line_stabilizer(m)));
  // conformal stabilizer admits dilatations and the inverted branch
  CHECK(member(compose(dilatation(Scalar(2)), time_inversion()),
               GroupId::line_stabilizer_conformal()));
  CHECK(member(compose(dilatation(Scalar(2)), rotation_cayley(Scalar(0), Scalar(0), Scalar(1))),
               GroupId::newton_line_stabilizer_conformal()));
  CHECK_FALSE(member(time_inversion(), GroupId::newton_line_stabilizer_conformal()));
  CHECK_FALSE(member(galilei_boost(Vec3(Scalar(1), Scalar(0), Scalar(0))),
                     GroupId::line_stabilizer_conformal()));
  // the two-element group generated by time inversion
  CHECK(member(identity_affine(), GroupId::time_inversion_pair()));
  CHECK(member(time_inversion(), GroupId::time_inversion_pair()));
  CHECK_FALSE(member(dilatation(Scalar(2)), GroupId::time_inversion_pair()));
}

TEST_CASE("conjugation identity for rest isotropy") {
  const Affine4 b = boost_x(Scalar(Rational(5, 4)), Scalar(Rational(3, 4)), kUnit);
  CHECK(conjugate_isotropy_check(identity_affine(), rotation_cayley(Scalar(1), Scalar(0), Scalar(0)),
                                 basis_e4(), kUnit));
  CHECK(conjugate_isotropy_check(b, rotation_cayley(Scalar(1), Scalar(0), Scalar(0)),
                                 basis_e4(), kUnit));
  CHECK(conjugate_isotropy_check(b, rotation_cayley(Scalar(0), Scalar(0), Scalar(1)),
                                 basis_e4(), kUnit));
  CHECK(conjugate_isotropy_check(b, b, basis_e4(), kUnit));
}

TEST_CASE("every constructor output passes its own group predicate") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 100; ++t) {
    CHECK(member(rotation_cayley(rs(rng), rs(rng), rs(rng)), GroupId::spatial_rotations()));
    CHECK(member(translation(rv4(rng)), GroupId::translations()));
    CHECK(member(galilei_boost(rv3(rng)), GroupId::galilei()));
    auto [g1, bg1] = rand_boost_params(rng);
    CHECK(member(boost_x(g1, bg1, kUnit), GroupId::proper_orthochronous_lorentz(kUnit)));
  }
}
