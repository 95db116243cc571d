#ifndef RELSIM_GROUPS_HPP
#define RELSIM_GROUPS_HPP

#include <optional>
#include <string>

#include "relsim/affine.hpp"

namespace relsim {

// The transformation groups this project classifies relations against.
// Spelled out:
//   Newton            = spatial rotations |x translations
//   ConformalNewton   = positive dilatations adjoined to Newton
//   Galilei           = Newton plus uniform boosts
//   ConformalGalilei  = positive dilatations adjoined to Galilei
//   Lorentz / Orthochronous / ProperOrthochronous = homogeneous isometry
//                       groups of g_lambda (translation must vanish)
//   Poincare variants = the corresponding groups with translations
//   ConformalPoincare = positive-similitude linear parts with translations
//   RestIsotropy(u)   = proper orthochronous Poincare maps whose linear part
//                       fixes the future timelike vector u
//   ConformalRestIsotropy(u) = conformal counterparts preserving the line <u>
//   LineStabilizer         = Poincare maps preserving the line o + R e4
//   LineStabilizerConformal        = its conformal extension (time inversion allowed)
//   NewtonLineStabilizerConformal  = conformal-Newton stabilizer of the same line
//   TimeInversionPair = {identity, time inversion}
//   SpatialRotations  = homogeneous spatial rotations
//   Translations      = pure translations
enum class GroupTag {
  Newton,
  ConformalNewton,
  Galilei,
  ConformalGalilei,
  Lorentz,
  OrthochronousLorentz,
  ProperOrthochronousLorentz,
  Poincare,
  OrthochronousProperPoincare,
  ConformalPoincare,
  RestIsotropy,
  ConformalRestIsotropy,
  LineStabilizer,
  LineStabilizerConformal,
  NewtonLineStabilizerConformal,
  TimeInversionPair,
  SpatialRotations,
  Translations,
};

struct GroupId {
  GroupTag tag;
  std::optional<Vec4> u;          // for the isotropy groups
  std::optional<MetricParams> m;  // for the Lorentzian groups

  static GroupId newton() { return {GroupTag::Newton, {}, {}}; }
  static GroupId conformal_newton() { return {GroupTag::ConformalNewton, {}, {}}; }
  static GroupId galilei() { return {GroupTag::Galilei, {}, {}}; }
  static GroupId conformal_galilei() { return {GroupTag::ConformalGalilei, {}, {}}; }
  static GroupId lorentz(MetricParams m) { return {GroupTag::Lorentz, {}, std::move(m)}; }
  static GroupId orthochronous_lorentz(MetricParams m) {
    return {GroupTag::OrthochronousLorentz, {}, std::move(m)};
  }
  static GroupId proper_orthochronous_lorentz(MetricParams m) {
    return {GroupTag::ProperOrthochronousLorentz, {}, std::move(m)};
  }
  static GroupId poincare(MetricParams m) { return {GroupTag::Poincare, {}, std::move(m)}; }
  static GroupId orthochronous_proper_poincare(MetricParams m) {
    return {GroupTag::OrthochronousProperPoincare, {}, std::move(m)};
  }
  static GroupId conformal_poincare(MetricParams m) {
    return {GroupTag::ConformalPoincare, {}, std::move(m)};
  }
  static GroupId rest_isotropy(Vec4 u, MetricParams m);
  static GroupId conformal_rest_isotropy(Vec4 u, MetricParams m);
  static GroupId line_stabilizer(MetricParams m) {
    return {GroupTag::LineStabilizer, {}, std::move(m)};
  }
  static GroupId line_stabilizer_conformal() {
    return {GroupTag::LineStabilizerConformal, {}, {}};
  }
  static GroupId newton_line_stabilizer_conformal() {
    return {GroupTag::NewtonLineStabilizerConformal, {}, {}};
  }
  static GroupId time_inversion_pair() { return {GroupTag::TimeInversionPair, {}, {}}; }
  static GroupId spatial_rotations() { return {GroupTag::SpatialRotations, {}, {}}; }
  static GroupId translations() { return {GroupTag::Translations, {}, {}}; }
};

// Exact membership predicate; no tolerances anywhere.
bool member(const Affine4& g, const GroupId& group);

// ---- constructors ----

// Cayley transform of the skew matrix built from (p1, p2, p3), embedded as a
// purely spatial rotation. Reaches every rational rotation without -1
// eigenvalue; always defined since det(I - K) = 1 + |p|^2 > 0.
Affine4 rotation_cayley(const Scalar& p1, const Scalar& p2, const Scalar& p3);
Mat3 rotation_cayley3(const Scalar& p1, const Scalar& p2, const Scalar& p3);

// x-axis boost parameterized by (gamma, beta*gamma) with
// gamma^2 - (beta gamma)^2 = 1, gamma > 0; maps e4 to (beta gamma c, 0, 0, gamma).
Affine4 boost_x(const Scalar& gamma, const Scalar& beta_gamma, const MetricParams& m);

Affine4 dilatation(const Scalar& lam); // lam > 0
Affine4 time_inversion();
Affine4 galilei_boost(const Vec3& w);
Affine4 translation(const Vec4& b);
Affine4 spatial_rotation(const Mat3& s); // embeds a 3x3 block, no checks

// Checks, on the given inputs, the conjugation identity for rest isotropy:
// member(g, RestIsotropy(Lambda u)) <=> member(Lambda^-1 g Lambda, RestIsotropy(u)).
bool conjugate_isotropy_check(const Affine4& lambda_map, const Affine4& g,
                              const Vec4& u, const MetricParams& m);

} // namespace relsim

#endif
