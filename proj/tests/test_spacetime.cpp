#include <doctest.h>

#include <random>

#include "relsim/groups.hpp"
#include "relsim/spacetime.hpp"

using namespace relsim;

namespace {

Event ev(int x1, int x2, int x3, int x4) {
  return Event(Scalar(x1), Scalar(x2), Scalar(x3), Scalar(x4));
}

Scalar rs(std::mt19937_64& rng) {
  auto num = [&](int lo, int hi) {
    return static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1)) + lo;
  };
  return Scalar(Rational(num(-6, 6), num(1, 4)));
}

Vec4 rv(std::mt19937_64& rng) { return Vec4(rs(rng), rs(rng), rs(rng), rs(rng)); }

} // namespace

TEST_CASE("metric parameter must be positive") {
  CHECK_THROWS_AS(MetricParams(Scalar(0)), PreconditionError);
  CHECK_THROWS_AS(MetricParams(Scalar(-2)), PreconditionError);
}

TEST_CASE("lorentz form on basis vectors") {
  const MetricParams unit(Scalar(1));
  const MetricParams c3(Scalar(3));
  const Vec4 e1(Scalar(1), Scalar(0), Scalar(0), Scalar(0));
  const Vec4 e4 = basis_e4();
  CHECK(lorentz_form(e1, e1, unit) == Scalar(1));
  CHECK(lorentz_form(e4, e4, c3) == Scalar(-9));
  CHECK(lorentz_form(e1, e4, unit) == Scalar(0));
  CHECK(lorentz_form(e1, e4, c3) == Scalar(0));
}

TEST_CASE("lorentz form is symmetric and bilinear on random triples") {
  std::mt19937_64 rng(5);
  const MetricParams m(Scalar(Rational(3, 2)));
  for (int trial = 0; trial < 200; ++trial) {
    const Vec4 u = rv(rng);
    const Vec4 v = rv(rng);
    const Vec4 w = rv(rng);
    const Scalar a = rs(rng);
    CHECK(lorentz_form(u, v, m) == lorentz_form(v, u, m));
    CHECK(lorentz_form(u + w, v, m) == lorentz_form(u, v, m) + lorentz_form(w, v, m));
    CHECK(lorentz_form(a * u, v, m) == a * lorentz_form(u, v, m));
  }
}

TEST_CASE("causal classification") {
  const MetricParams m(Scalar(1));
  CHECK(causal_class(Vec4(), m) == CausalClass::Zero);
  CHECK(causal_class(basis_e4(), m) == CausalClass::TimelikeFuture);
  CHECK(causal_class(-basis_e4(), m) == CausalClass::TimelikePast);
  CHECK(causal_class(Vec4(Scalar(1), Scalar(0), Scalar(0), Scalar(1)), m) ==
        CausalClass::NullFuture);
  CHECK(causal_class(Vec4(Scalar(1), Scalar(0), Scalar(0), Scalar(-1)), m) ==
        CausalClass::NullPast);
  CHECK(causal_class(Vec4(Scalar(1), Scalar(0), Scalar(0), Scalar(0)), m) ==
        CausalClass::Spacelike);
  // lambda scales the cone
  const MetricParams wide(Scalar(3));
  CHECK(causal_class(Vec4(Scalar(2), Scalar(0), Scalar(0), Scalar(1)), wide) ==
        CausalClass::TimelikeFuture);
}

TEST_CASE("classification partitions and negation swaps future and past") {
  std::mt19937_64 rng(17);
  const MetricParams m(Scalar(1));
  for (int trial = 0; trial < 500; ++trial) {
    const Vec4 v = rv(rng);
    const CausalClass c = causal_class(v, m);
    const CausalClass cn = causal_class(-v, m);
    switch (c) {
      case CausalClass::Zero: CHECK(cn == CausalClass::Zero); break;
      case CausalClass::Spacelike: CHECK(cn == CausalClass::Spacelike); break;
      case CausalClass::NullFuture: CHECK(cn == CausalClass::NullPast); break;
      case CausalClass::NullPast: CHECK(cn == CausalClass::NullFuture); break;
      case CausalClass::TimelikeFuture: CHECK(cn == CausalClass::TimelikePast); break;
      case CausalClass::TimelikePast: CHECK(cn == CausalClass::TimelikeFuture); break;
    }
  }
}

TEST_CASE("proper orthochronous maps preserve the causal class") {
  std::mt19937_64 rng(23);
  const MetricParams m(Scalar(1));
  const Affine4 g = compose(boost_x(Scalar(Rational(5, 4)), Scalar(Rational(3, 4)), m),
                            rotation_cayley(Scalar(Rational(1, 2)), Scalar(0), Scalar(1)));
  REQUIRE(member(g, GroupId::proper_orthochronous_lorentz(m)));
  for (int trial = 0; trial < 300; ++trial) {
    const Vec4 v = rv(rng);
    CHECK(causal_class(apply_linear(g, v), m) == causal_class(v, m));
  }
}

TEST_CASE("causal order") {
  const MetricParams m(Scalar(1));
  CHECK(causal_order(ev(0, 0, 0, 0), ev(0, 0, 0, 0), m));
  CHECK(causal_order(ev(0, 0, 0, 0), ev(0, 0, 0, 1), m));
  CHECK_FALSE(causal_order(ev(0, 0, 0, 0), ev(2, 0, 0, 1), m));
  CHECK_FALSE(causal_order(ev(0, 0, 0, 1), ev(0, 0, 0, 0), m));
}

TEST_CASE("causal connectibility") {
  const MetricParams m(Scalar(1));
  CHECK_FALSE(causally_connectible_classical(ev(0, 0, 0, 0), ev(1, 0, 0, 0)));
  CHECK(causally_connectible_classical(ev(0, 0, 0, 0), ev(0, 0, 0, 5)));
  CHECK(causally_connectible_minkowski(ev(0, 0, 0, 0), ev(1, 0, 0, 2), m));
  CHECK_FALSE(causally_connectible_minkowski(ev(0, 0, 0, 0), ev(0, 0, 0, 0), m));
  CHECK_FALSE(causally_connectible_minkowski(ev(0, 0, 0, 0), ev(3, 0, 0, 1), m));
  CHECK(causally_connectible(ev(0, 0, 0, 0), ev(1, 0, 0, 1), CausalKind::minkowski(m)));
  CHECK_FALSE(causally_connectible(ev(0, 0, 0, 0), ev(1, 0, 0, 0), CausalKind::classical()));
}

TEST_CASE("standard simultaneity") {
  const MetricParams m(Scalar(1));
  const Vec4 e4 = basis_e4();
  CHECK(standard_sim(e4, ev(0, 0, 0, 0), ev(7, -2, 3, 0), m));
  CHECK_FALSE(standard_sim(e4, ev(0, 0, 0, 0), ev(0, 0, 0, 1), m));
  // tilted observer: (3/4, 0, 0, 5/4) is orthogonal to (5, 0, 0, 3)
  const Vec4 u(Scalar(Rational(3, 4)), Scalar(0), Scalar(0), Scalar(Rational(5, 4)));
  CHECK(standard_sim(u, ev(0, 0, 0, 0), ev(5, 0, 0, 3), m));
  CHECK_THROWS_AS(
      standard_sim(Vec4(Scalar(1), Scalar(0), Scalar(0), Scalar(0)), ev(0, 0, 0, 0),
                   ev(0, 0, 0, 0), m),
      PreconditionError);
  CHECK_THROWS_AS(standard_sim(-basis_e4(), ev(0, 0, 0, 0), ev(1, 0, 0, 0), m),
                  PreconditionError);
}

TEST_CASE("standard simultaneity is an equivalence of a linear functional") {
  std::mt19937_64 rng(31);
  const MetricParams m(Scalar(1));
  const Vec4 u(Scalar(Rational(3, 4)), Scalar(0), Scalar(0), Scalar(Rational(5, 4)));
  std::vector<Event> events;
  for (int i = 0; i < 12; ++i) events.push_back(Event(rv(rng)));
  for (const Event& p : events) CHECK(standard_sim(u, p, p, m));
  for (const Event& p : events)
    for (const Event& q : events) {
      CHECK(standard_sim(u, p, q, m) == standard_sim(u, q, p, m));
      for (const Event& r : events)
        if (standard_sim(u, p, q, m) && standard_sim(u, q, r, m))
          CHECK(standard_sim(u, p, r, m));
    }
}
