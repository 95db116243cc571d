#ifndef RELSIM_SPACETIME_HPP
#define RELSIM_SPACETIME_HPP

#include <optional>
#include <string>

#include "relsim/linalg.hpp"

namespace relsim {

// Parameters of the Lorentzian form g_lambda = diag(1, 1, 1, -lambda^2).
// The physical case uses lambda = c, the light speed in space units per
// time unit.
struct MetricParams {
  Scalar lambda;

  explicit MetricParams(Scalar l) : lambda(std::move(l)) {
    if (sign(lambda) <= 0) throw PreconditionError("metric parameter lambda must be > 0");
  }

  Mat4 form_matrix() const {
    const Scalar l2 = lambda * lambda;
    return Mat4::diagonal(Scalar(1), Scalar(1), Scalar(1), -l2);
  }

  friend bool operator==(const MetricParams&, const MetricParams&) = default;
};

inline MetricParams unit_metric() { return MetricParams(Scalar(1)); }

enum class CausalClass {
  Zero,
  Spacelike,
  NullFuture,
  NullPast,
  TimelikeFuture,
  TimelikePast,
};

std::string to_string(CausalClass c);

// u . v under g_lambda: u1 v1 + u2 v2 + u3 v3 - lambda^2 u4 v4, exact.
Scalar lorentz_form(const Vec4& u, const Vec4& v, const MetricParams& m);

// Exactly one class per vector. For nonzero causal vectors v4 cannot vanish
// (the form would be >= 0 with equality only at v = 0), so the future/past
// split below is total.
CausalClass causal_class(const Vec4& v, const MetricParams& m);

inline bool is_future_timelike(const Vec4& v, const MetricParams& m) {
  return causal_class(v, m) == CausalClass::TimelikeFuture;
}

inline bool is_causal_future(CausalClass c) {
  return c == CausalClass::NullFuture || c == CausalClass::TimelikeFuture;
}

// p <= q: q - p is zero or a future-pointing causal vector.
bool causal_order(const Event& p, const Event& q, const MetricParams& m);

// Minkowski connectibility: p != q and p - q timelike or lightlike.
bool causally_connectible_minkowski(const Event& p, const Event& q,
                                    const MetricParams& m);

// Classical (Newton/Galilei) connectibility: distinct absolute times.
bool causally_connectible_classical(const Event& p, const Event& q);

// Which causal structure a check runs against: Minkowski with a metric, or
// the classical absolute-time structure.
struct CausalKind {
  std::optional<MetricParams> metric; // nullopt = classical

  static CausalKind classical() { return CausalKind{std::nullopt}; }
  static CausalKind minkowski(MetricParams m) { return CausalKind{std::move(m)}; }
};

bool causally_connectible(const Event& p, const Event& q, const CausalKind& kind);

// Standard simultaneity R_u: x ~ y iff x - y is g-orthogonal to u.
// Requires u future timelike.
bool standard_sim(const Vec4& u, const Event& x, const Event& y,
                  const MetricParams& m);

} // namespace relsim

#endif
