#include "relsim/spacetime.hpp"

namespace relsim {

std::string to_string(CausalClass c) {
  switch (c) {
    case CausalClass::Zero: return "zero";
    case CausalClass::Spacelike: return "spacelike";
    case CausalClass::NullFuture: return "null-future";
    case CausalClass::NullPast: return "null-past";
    case CausalClass::TimelikeFuture: return "timelike-future";
    case CausalClass::TimelikePast: return "timelike-past";
  }
  return "?";
}

Scalar lorentz_form(const Vec4& u, const Vec4& v, const MetricParams& m) {
  const Scalar l2 = m.lambda * m.lambda;
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2] - l2 * u[3] * v[3];
}

CausalClass causal_class(const Vec4& v, const MetricParams& m) {
  if (v.is_zero()) return CausalClass::Zero;
  const int q = sign(lorentz_form(v, v, m));
  if (q > 0) return CausalClass::Spacelike;
  const int st = sign(v[3]);
  if (q < 0) return st > 0 ? CausalClass::TimelikeFuture : CausalClass::TimelikePast;
  return st > 0 ? CausalClass::NullFuture : CausalClass::NullPast;
}

bool causal_order(const Event& p, const Event& q, const MetricParams& m) {
  const CausalClass c = causal_class(q - p, m);
  return c == CausalClass::Zero || is_causal_future(c);
}

bool causally_connectible_minkowski(const Event& p, const Event& q,
                                    const MetricParams& m) {
  switch (causal_class(p - q, m)) {
    case CausalClass::NullFuture:
    case CausalClass::NullPast:
    case CausalClass::TimelikeFuture:
    case CausalClass::TimelikePast:
      return true;
    default:
      return false;
  }
}

bool causally_connectible_classical(const Event& p, const Event& q) {
  return p[3] != q[3];
}

bool causally_connectible(const Event& p, const Event& q, const CausalKind& kind) {
  if (kind.metric) return causally_connectible_minkowski(p, q, *kind.metric);
  return causally_connectible_classical(p, q);
}

bool standard_sim(const Vec4& u, const Event& x, const Event& y,
                  const MetricParams& m) {
  if (!is_future_timelike(u, m))
    throw PreconditionError("standard_sim requires a future timelike direction");
  return lorentz_form(x - y, u, m).is_zero();
}

} // namespace relsim
