#include <doctest.h>

#include <cmath>
#include <random>

#include "relsim/relation.hpp"

using namespace relsim;

namespace {

const MetricParams kUnit(Scalar(1));
const Scalar r2 = Scalar::sqrt2();

Event ev(int x1, int x2, int x3, int x4) {
  return Event(Scalar(x1), Scalar(x2), Scalar(x3), Scalar(x4));
}

Scalar rs(std::mt19937_64& rng) {
  auto num = [&](int lo, int hi) {
    return static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1)) + lo;
  };
  Scalar s(Rational(num(-5, 5), num(1, 3)));
  if (rng() % 4 == 0) s.b = Rational(num(-2, 2), num(1, 2));
  return s;
}

EventSetPtr random_set(std::mt19937_64& rng, size_t n) {
  auto set = std::make_shared<EventSet>();
  size_t made = 0;
  while (made < n) {
    Event e(rs(rng), rs(rng), rs(rng), rs(rng));
    if (set->index_of_point(e)) continue;
    set->add("e" + std::to_string(made++), e);
  }
  return set;
}

bool rel(const RelationSpec& s, const Event& p, const Event& q) {
  const RelAnswer a = related(s, p, q);
  REQUIRE(a.decided);
  return a.related;
}

} // namespace

TEST_CASE("trivial relations") {
  const RelationSpec total = RelationSpec::total();
  const RelationSpec ident = RelationSpec::identity();
  CHECK(rel(total, ev(0, 0, 0, 0), ev(9, 9, 9, 9)));
  CHECK(rel(ident, ev(1, 2, 3, 4), ev(1, 2, 3, 4)));
  CHECK_FALSE(rel(ident, ev(1, 2, 3, 4), ev(1, 2, 3, 5)));
}

TEST_CASE("newton families") {
  const RealSubgroupSpec h = RealSubgroupSpec::cyclic(Scalar(1));
  const RelationSpec worldline = RelationSpec::newton_type1(h);
  const RelationSpec slab = RelationSpec::newton_type2(h);
  CHECK(rel(worldline, ev(1, 2, 3, 0), ev(1, 2, 3, 5)));
  CHECK_FALSE(rel(worldline, ev(1, 2, 3, 0), ev(1, 2, 4, 5)));
  CHECK_FALSE(rel(worldline, ev(0, 0, 0, 0), Event(Scalar(0), Scalar(0), Scalar(0), r2)));
  CHECK(rel(slab, ev(1, 2, 3, 0), ev(9, 9, 9, -4)));
  CHECK_FALSE(rel(slab, ev(0, 0, 0, 0), Event(Scalar(0), Scalar(0), Scalar(0), Scalar(Rational(1, 2)))));
}

TEST_CASE("pencil families reduce to the newton ones along e4") {
  const RealSubgroupSpec h = RealSubgroupSpec::cyclic(Scalar(1));
  const RelationSpec p1 = RelationSpec::pencil_type1(basis_e4(), h, kUnit);
  const RelationSpec n1 = RelationSpec::newton_type1(h);
  const RelationSpec p2 = RelationSpec::pencil_type2(basis_e4(), h, kUnit);
  const RelationSpec n2 = RelationSpec::newton_type2(h);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    const Event p(rs(rng), rs(rng), rs(rng), rs(rng));
    const Event q(rs(rng), rs(rng), rs(rng), rs(rng));
    CHECK(rel(p1, p, q) == rel(n1, p, q));
    CHECK(rel(p2, p, q) == rel(n2, p, q));
  }
}

TEST_CASE("pencil families along a boosted direction") {
  const Vec4 u(Scalar(Rational(3, 4)), Scalar(0), Scalar(0), Scalar(Rational(5, 4)));
  const RealSubgroupSpec h = RealSubgroupSpec::cyclic(Scalar(1));
  const RelationSpec line = RelationSpec::pencil_type1(u, h, kUnit);
  const RelationSpec slab = RelationSpec::pencil_type2(u, h, kUnit);
  const Event o = ev(0, 0, 0, 0);
  // q = o + 2u is on the line with coefficient 2
  const Event q = o + Scalar(2) * u;
  CHECK(rel(line, o, q));
  CHECK(rel(slab, o, q));
  // orthogonal moves stay in the slab class but leave the line class
  const Event w = ev(5, 0, 0, 3); // (5,0,0,3) is g-orthogonal to u
  CHECK_FALSE(rel(line, o, w));
  CHECK(rel(slab, o, w));
  // a non-subgroup coefficient fails both
  const Event r = o + Scalar(Rational(1, 2)) * u;
  CHECK_FALSE(rel(line, o, r));
  CHECK_FALSE(rel(slab, o, r));
  CHECK_THROWS_AS(
      RelationSpec::pencil_type1(Vec4(Scalar(1), Scalar(0), Scalar(0), Scalar(0)), h, kUnit),
      PreconditionError);
}

TEST_CASE("standard simultaneity spec equals pencil type-II with zero subgroup") {
  const Vec4 u(Scalar(Rational(3, 4)), Scalar(0), Scalar(0), Scalar(Rational(5, 4)));
  const RelationSpec ss = RelationSpec::standard_sim(u, kUnit);
  const RelationSpec pz = RelationSpec::pencil_type2(u, RealSubgroupSpec::zero(), kUnit);
  std::mt19937_64 rng(21);
  for (int t = 0; t < 10; ++t) {
    auto x = random_set(rng, 14);
    CHECK(restrict_to(ss, x) == restrict_to(pz, x));
  }
  // along e4 the zero-parameter slab family is exactly R_{e4}
  CHECK(rel(RelationSpec::pencil_type2(basis_e4(), RealSubgroupSpec::zero(), kUnit),
            ev(0, 0, 0, 0), ev(3, 1, -4, 0)));
  CHECK(rel(RelationSpec::standard_sim(basis_e4(), kUnit), ev(0, 0, 0, 0),
            ev(3, 1, -4, 0)));
}

TEST_CASE("half cones: documented examples") {
  const RelationSpec up = RelationSpec::half_cone(Scalar(1), +1);
  // both points sit on the cone with apex (0,0,0,-1)
  CHECK(rel(up, ev(1, 0, 0, 0), ev(0, 1, 0, 0)));
  // no two line points are equivalent
  CHECK_FALSE(rel(up, ev(0, 0, 0, 0), ev(0, 0, 0, 1)));
  // apex and shell point
  CHECK(rel(up, ev(0, 0, 0, 0), ev(1, 0, 0, 1)));
  CHECK(rel(up, ev(0, 0, 0, 0), ev(3, 4, 0, 5)));
  CHECK_FALSE(rel(up, ev(0, 0, 0, 0), ev(1, 0, 0, -1)));
  const RelationSpec down = RelationSpec::half_cone(Scalar(1), -1);
  CHECK(rel(down, ev(0, 0, 0, 0), ev(1, 0, 0, -1)));
  CHECK_FALSE(rel(down, ev(0, 0, 0, 0), ev(1, 0, 0, 1)));
  // wider aperture
  const RelationSpec wide = RelationSpec::half_cone(Scalar(2), +1);
  CHECK(rel(wide, ev(0, 0, 0, 0), ev(2, 0, 0, 1)));
  CHECK_FALSE(rel(wide, ev(0, 0, 0, 0), ev(1, 0, 0, 1)));
  CHECK_THROWS_AS(RelationSpec::half_cone(Scalar(0), +1), PreconditionError);
  CHECK_THROWS_AS(RelationSpec::half_cone(Scalar(1), 2), PreconditionError);
}

TEST_CASE("half cone membership agrees with the floating apex (float oracle)") {
  std::mt19937_64 rng(31);
  const Scalar c_hat(Rational(3, 2));
  const RelationSpec cone = RelationSpec::half_cone(c_hat, +1);
  const double c = 1.5;
  int related_count = 0;
  for (int t = 0; t < 4000; ++t) {
    auto ri = [&](int lo, int hi) {
      return static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1)) +
             lo;
    };
    const Event p(Scalar(ri(-4, 4)), Scalar(ri(-4, 4)), Scalar(ri(-4, 4)), Scalar(ri(-4, 4)));
    const Event q(Scalar(ri(-4, 4)), Scalar(ri(-4, 4)), Scalar(ri(-4, 4)), Scalar(ri(-4, 4)));
    auto apex = [&](const Event& e) {
      const double nx = to_double(e[0]);
      const double ny = to_double(e[1]);
      const double nz = to_double(e[2]);
      return to_double(e[3]) - std::sqrt(nx * nx + ny * ny + nz * nz) / c;
    };
    const bool exact = rel(cone, p, q);
    const bool approx = std::fabs(apex(p) - apex(q)) < 1e-9;
    CHECK(exact == approx);
    if (exact) ++related_count;
  }
  CHECK(related_count > 0);
}

TEST_CASE("all families restrict to genuine equivalences on random sets") {
  std::mt19937_64 rng(41);
  const Vec4 u(Scalar(Rational(3, 4)), Scalar(0), Scalar(0), Scalar(Rational(5, 4)));
  const std::vector<RelationSpec> specs = {
      RelationSpec::total(),
      RelationSpec::identity(),
      RelationSpec::newton_type1(RealSubgroupSpec::cyclic(Scalar(1))),
      RelationSpec::newton_type2(RealSubgroupSpec::generated({Scalar(1), r2})),
      RelationSpec::pencil_type1(u, RealSubgroupSpec::cyclic(Scalar(Rational(1, 2))), kUnit),
      RelationSpec::pencil_type2(u, RealSubgroupSpec::generated({Scalar(1), r2}), kUnit),
      RelationSpec::standard_sim(u, kUnit),
      RelationSpec::half_cone(Scalar(1), +1),
      RelationSpec::half_cone(Scalar(Rational(1, 2)), -1),
  };
  for (const RelationSpec& spec : specs) {
    auto x = random_set(rng, 16);
    // restrict_to verifies reflexivity/symmetry/transitivity internally and
    // throws a logic error if the trace misbehaves
    const FinitePartition p = restrict_to(spec, x);
    for (size_t i = 0; i < x->size(); ++i)
      for (size_t j = i; j < x->size(); ++j) {
        const RelAnswer fwd = related(spec, x->event(i), x->event(j));
        const RelAnswer bwd = related(spec, x->event(j), x->event(i));
        CHECK(fwd.related == bwd.related);
        CHECK(p.same(i, j) == fwd.related);
      }
  }
}

TEST_CASE("restriction: documented examples") {
  auto x = make_event_set({
      {"o", ev(0, 0, 0, 0)},
      {"sx", ev(1, 0, 0, 0)},
      {"t1", ev(0, 0, 0, 1)},
  });
  CHECK(restrict_to(RelationSpec::total(), x) == FinitePartition::top(x));
  CHECK(restrict_to(RelationSpec::identity(), x) == FinitePartition::bottom(x));
  const FinitePartition p = restrict_to(RelationSpec::standard_sim(basis_e4(), kUnit), x);
  CHECK(p.block_count() == 2);
  CHECK(p.same(0, 1));
  CHECK_FALSE(p.same(0, 2));
}

TEST_CASE("coset relation with a finite orbit decides everything") {
  const Affine4 rz = rotation_cayley(Scalar(0), Scalar(0), Scalar(1));
  const RelationSpec spec = RelationSpec::coset({rz}, Event(ev(1, 0, 0, 0)), 6);
  CHECK(rel(spec, ev(1, 0, 0, 0), ev(0, 1, 0, 0)));
  CHECK(rel(spec, ev(1, 0, 0, 0), ev(-1, 0, 0, 0)));
  // the orbit of (1,0,0,0) is the 4-cycle; (2,0,0,0) is out of it and the
  // closed orbit makes the negative exact
  const RelAnswer neg = related(spec, ev(1, 0, 0, 0), ev(2, 0, 0, 0));
  CHECK(neg.decided);
  CHECK_FALSE(neg.related);
  // restriction over the orbit gives a single block plus outliers
  auto x = make_event_set({
      {"px", ev(1, 0, 0, 0)},
      {"py", ev(0, 1, 0, 0)},
      {"mx", ev(-1, 0, 0, 0)},
      {"far", ev(2, 0, 0, 0)},
  });
  const FinitePartition p = restrict_to(spec, x);
  CHECK(p.block_count() == 2);
  CHECK(p.same(0, 1));
  CHECK(p.same(0, 2));
  CHECK_FALSE(p.same(0, 3));
}

TEST_CASE("coset relation reports bound exhaustion honestly") {
  const Affine4 t = translation(Vec4(Scalar(1), Scalar(0), Scalar(0), Scalar(0)));
  const RelationSpec spec = RelationSpec::coset({t}, Event(ev(0, 0, 0, 0)), 3);
  // reachable within the bound: decided yes
  CHECK(rel(spec, ev(0, 0, 0, 0), ev(2, 0, 0, 0)));
  // not reachable within the bound on an infinite orbit: inconclusive
  const RelAnswer far = related(spec, ev(0, 0, 0, 0), ev(9, 0, 0, 0));
  CHECK_FALSE(far.decided);
  // restriction refuses to guess and names the pair
  auto x = make_event_set({{"o", ev(0, 0, 0, 0)}, {"far", ev(9, 0, 0, 0)}});
  try {
    restrict_to(spec, x);
    FAIL("expected PreconditionError");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("(o, far)") != std::string::npos);
  }
}

TEST_CASE("causality condition scan") {
  auto x = make_event_set({
      {"o", ev(0, 0, 0, 0)},
      {"sx", ev(1, 0, 0, 0)},
      {"t1", ev(0, 0, 0, 1)},
  });
  // absolute simultaneity passes in the classical structure
  const auto ok = satisfies_causality(RelationSpec::newton_type2(RealSubgroupSpec::zero()),
                                      x, CausalKind::classical());
  CHECK(ok.ok);
  // a time-step family is caught with a concrete pair
  const auto bad = satisfies_causality(
      RelationSpec::newton_type2(RealSubgroupSpec::cyclic(Scalar(1))), x,
      CausalKind::classical());
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.violation);
  CHECK(bad.violation->first == "o");
  CHECK(bad.violation->second == "t1");
  // spacelike-only separations are safe in the Minkowski structure
  auto plane = make_event_set({
      {"a", ev(0, 0, 0, 0)},
      {"b", ev(1, 0, 0, 0)},
      {"c", ev(0, -2, 1, 0)},
  });
  const auto mink = satisfies_causality(RelationSpec::standard_sim(basis_e4(), kUnit),
                                        plane, CausalKind::minkowski(kUnit));
  CHECK(mink.ok);
}

TEST_CASE("relation spec text format") {
  const RelationSpec a = parse_relation_spec("newton2 H=cyclic:1/6");
  CHECK(a.kind == RelationSpec::Kind::NewtonTypeII);
  CHECK(a.subgroup.cyclic_gen == Scalar(Rational(1, 6)));
  const RelationSpec b = parse_relation_spec("pencil2 u=(3/4,0,0,5/4) H=zero lambda=1");
  CHECK(b.kind == RelationSpec::Kind::PencilTypeII);
  CHECK(b.u == Vec4(Scalar(Rational(3, 4)), Scalar(0), Scalar(0), Scalar(Rational(5, 4))));
  const RelationSpec c = parse_relation_spec("halfcone c=1 sign=+");
  CHECK(c.kind == RelationSpec::Kind::HalfCone);
  CHECK(c.cone_sign == 1);
  const RelationSpec d = parse_relation_spec("stdsim u=(0,0,0,1) lambda=1");
  CHECK(d.kind == RelationSpec::Kind::StandardSim);
  CHECK(parse_relation_spec("total").kind == RelationSpec::Kind::Total);
  CHECK(parse_relation_spec("identity").kind == RelationSpec::Kind::Identity);
  CHECK_THROWS_AS(parse_relation_spec("newton2"), ParseError);
  CHECK_THROWS_AS(parse_relation_spec("pencil2 u=(1,0,0,0) H=zero lambda=1"),
                  PreconditionError); // u not timelike
  CHECK_THROWS_AS(parse_relation_spec("wat H=zero"), ParseError);
}
