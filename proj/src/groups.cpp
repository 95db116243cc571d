#include "relsim/groups.hpp"

namespace relsim {

GroupId GroupId::rest_isotropy(Vec4 u, MetricParams m) {
  if (!is_future_timelike(u, m))
    throw PreconditionError("rest isotropy requires a future timelike direction");
  return {GroupTag::RestIsotropy, std::move(u), std::move(m)};
}

GroupId GroupId::conformal_rest_isotropy(Vec4 u, MetricParams m) {
  if (!is_future_timelike(u, m))
    throw PreconditionError("conformal rest isotropy requires a future timelike direction");
  return {GroupTag::ConformalRestIsotropy, std::move(u), std::move(m)};
}

namespace {

const Scalar kOne(1);

bool translation_is_zero(const Affine4& g) { return g.translation.is_zero(); }

bool translation_is_time_only(const Affine4& g) {
  return g.translation.spatial().is_zero();
}

Mat3 spatial_block(const Mat4& l) {
  Mat3 s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s.at(i, j) = l.at(i, j);
  return s;
}

// Linear part (S w; 0 1): bottom row (0,0,0,1). The boost column w is free.
bool has_galilei_shape(const Mat4& l, bool require_zero_boost) {
  if (!l.at(3, 0).is_zero() || !l.at(3, 1).is_zero() || !l.at(3, 2).is_zero())
    return false;
  if (l.at(3, 3) != kOne) return false;
  if (require_zero_boost &&
      !(l.at(0, 3).is_zero() && l.at(1, 3).is_zero() && l.at(2, 3).is_zero()))
    return false;
  return is_special_orthogonal(spatial_block(l));
}

// Linear part mu * (S w; 0 1) with mu > 0 read off the (4,4) entry.
bool has_conformal_galilei_shape(const Mat4& l, bool require_zero_boost) {
  const Scalar mu = l.at(3, 3);
  if (sign(mu) <= 0) return false;
  if (!l.at(3, 0).is_zero() || !l.at(3, 1).is_zero() || !l.at(3, 2).is_zero())
    return false;
  if (require_zero_boost &&
      !(l.at(0, 3).is_zero() && l.at(1, 3).is_zero() && l.at(2, 3).is_zero()))
    return false;
  const Scalar inv_mu = inverse(mu);
  Mat3 s = spatial_block(l);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s.at(i, j) *= inv_mu;
  return is_special_orthogonal(s);
}

bool is_lorentz(const Mat4& l, const MetricParams& m) {
  const Mat4 g = m.form_matrix();
  return transpose(l) * g * l == g;
}

// L^T G L = nu G with nu > 0; nu is returned for the callers that need it.
bool is_conformal_lorentz(const Mat4& l, const MetricParams& m, Scalar* nu_out) {
  const Mat4 g = m.form_matrix();
  const Mat4 lhs = transpose(l) * g * l;
  const Scalar nu = lhs.at(0, 0);
  if (sign(nu) <= 0) return false;
  if (lhs != nu * g) return false;
  if (nu_out) *nu_out = nu;
  return true;
}

// Membership in R+ L(up,+): a similitude with positive multiplier nu,
// det = nu^2 and positive (4,4) entry. Over the reals such an L is a
// positive multiple of a proper orthochronous Lorentz map; phrasing the test
// through det avoids extracting sqrt(nu).
bool is_positive_multiple_of_proper_ortho_lorentz(const Mat4& l, const MetricParams& m) {
  Scalar nu;
  if (!is_conformal_lorentz(l, m, &nu)) return false;
  if (det(l) != nu * nu) return false;
  return sign(l.at(3, 3)) > 0;
}

bool fixes_vector(const Mat4& l, const Vec4& u) { return l * u == u; }

// L u = rho u for some rho > 0.
bool scales_vector_positively(const Mat4& l, const Vec4& u) {
  const Vec4 lu = l * u;
  int pivot = -1;
  for (int i = 0; i < 4; ++i)
    if (!u[i].is_zero()) {
      pivot = i;
      break;
    }
  if (pivot < 0) return false;
  const Scalar rho = lu[pivot] / u[pivot];
  if (sign(rho) <= 0) return false;
  return lu == rho * u;
}

// Linear part mu * Sigma_S or mu * Sigma_S * Theta, mu > 0, S in SO(3).
// allow_time_flip selects whether the Theta branch is admitted.
bool has_scaled_rotation_shape(const Mat4& l, bool allow_time_flip) {
  for (int i = 0; i < 3; ++i)
    if (!l.at(i, 3).is_zero() || !l.at(3, i).is_zero()) return false;
  const Scalar d = l.at(3, 3);
  const int sd = sign(d);
  if (sd == 0) return false;
  if (sd < 0 && !allow_time_flip) return false;
  const Scalar mu = sd > 0 ? d : -d;
  const Scalar inv_mu = inverse(mu);
  Mat3 s = spatial_block(l);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s.at(i, j) *= inv_mu;
  return is_special_orthogonal(s);
}

} // namespace

bool member(const Affine4& g, const GroupId& group) {
  const Mat4& l = g.linear;
  switch (group.tag) {
    case GroupTag::Newton:
      return has_galilei_shape(l, /*require_zero_boost=*/true);
    case GroupTag::ConformalNewton:
      return has_conformal_galilei_shape(l, /*require_zero_boost=*/true);
    case GroupTag::Galilei:
      return has_galilei_shape(l, /*require_zero_boost=*/false);
    case GroupTag::ConformalGalilei:
      return has_conformal_galilei_shape(l, /*require_zero_boost=*/false);
    case GroupTag::Lorentz:
      return translation_is_zero(g) && is_lorentz(l, *group.m);
    case GroupTag::OrthochronousLorentz:
      return translation_is_zero(g) && is_lorentz(l, *group.m) && sign(l.at(3, 3)) > 0;
    case GroupTag::ProperOrthochronousLorentz:
      return translation_is_zero(g) && is_lorentz(l, *group.m) &&
             sign(l.at(3, 3)) > 0 && det(l) == Scalar(1);
    case GroupTag::Poincare:
      return is_lorentz(l, *group.m);
    case GroupTag::OrthochronousProperPoincare:
      return is_lorentz(l, *group.m) && sign(l.at(3, 3)) > 0 && det(l) == Scalar(1);
    case GroupTag::ConformalPoincare:
      return is_conformal_lorentz(l, *group.m, nullptr);
    case GroupTag::RestIsotropy:
      return is_lorentz(l, *group.m) && sign(l.at(3, 3)) > 0 &&
             det(l) == Scalar(1) && fixes_vector(l, *group.u);
    case GroupTag::ConformalRestIsotropy:
      return is_positive_multiple_of_proper_ortho_lorentz(l, *group.m) &&
             scales_vector_positively(l, *group.u);
    case GroupTag::LineStabilizer: {
      if (!translation_is_time_only(g)) return false;
      if (!is_lorentz(l, *group.m)) return false;
      const Vec4 le4 = l * basis_e4();
      return le4 == basis_e4() || le4 == -basis_e4();
    }
    case GroupTag::LineStabilizerConformal:
      return translation_is_time_only(g) &&
             has_scaled_rotation_shape(l, /*allow_time_flip=*/true);
    case GroupTag::NewtonLineStabilizerConformal:
      return translation_is_time_only(g) &&
             has_scaled_rotation_shape(l, /*allow_time_flip=*/false);
    case GroupTag::TimeInversionPair:
      return g == identity_affine() || g == time_inversion();
    case GroupTag::SpatialRotations:
      return translation_is_zero(g) && has_galilei_shape(l, /*require_zero_boost=*/true);
    case GroupTag::Translations:
      return l == Mat4::identity();
  }
  return false;
}

Mat3 rotation_cayley3(const Scalar& p1, const Scalar& p2, const Scalar& p3) {
  // S = (I - K)^-1 (I + K) with K the cross-product matrix of (p1,p2,p3).
  // Closed form via the adjugate of I - K; det(I - K) = 1 + |p|^2.
  Mat3 k;
  k.at(0, 1) = -p3;
  k.at(0, 2) = p2;
  k.at(1, 0) = p3;
  k.at(1, 2) = -p1;
  k.at(2, 0) = -p2;
  k.at(2, 1) = p1;
  const Mat3 i3 = Mat3::identity();
  Mat3 i_minus_k;
  Mat3 i_plus_k;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      i_minus_k.at(r, c) = i3.at(r, c) - k.at(r, c);
      i_plus_k.at(r, c) = i3.at(r, c) + k.at(r, c);
    }
  // Invert I - K directly (3x3 adjugate).
  const Mat3& a = i_minus_k;
  const Scalar d = det(a);
  Mat3 adj;
  adj.at(0, 0) = a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1);
  adj.at(0, 1) = a.at(0, 2) * a.at(2, 1) - a.at(0, 1) * a.at(2, 2);
  adj.at(0, 2) = a.at(0, 1) * a.at(1, 2) - a.at(0, 2) * a.at(1, 1);
  adj.at(1, 0) = a.at(1, 2) * a.at(2, 0) - a.at(1, 0) * a.at(2, 2);
  adj.at(1, 1) = a.at(0, 0) * a.at(2, 2) - a.at(0, 2) * a.at(2, 0);
  adj.at(1, 2) = a.at(0, 2) * a.at(1, 0) - a.at(0, 0) * a.at(1, 2);
  adj.at(2, 0) = a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0);
  adj.at(2, 1) = a.at(0, 1) * a.at(2, 0) - a.at(0, 0) * a.at(2, 1);
  adj.at(2, 2) = a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0);
  const Scalar dinv = inverse(d);
  Mat3 ainv;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) ainv.at(r, c) = dinv * adj.at(r, c);
  return ainv * i_plus_k;
}

Affine4 rotation_cayley(const Scalar& p1, const Scalar& p2, const Scalar& p3) {
  return spatial_rotation(rotation_cayley3(p1, p2, p3));
}

Affine4 spatial_rotation(const Mat3& s) {
  Affine4 g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g.linear.at(i, j) = s.at(i, j);
  return g;
}

Affine4 boost_x(const Scalar& gamma, const Scalar& beta_gamma, const MetricParams& m) {
  if (gamma * gamma - beta_gamma * beta_gamma != Scalar(1) || sign(gamma) <= 0)
    throw PreconditionError("boost parameters must satisfy gamma^2 - (beta gamma)^2 = 1, gamma > 0");
  Affine4 g;
  g.linear.at(0, 0) = gamma;
  g.linear.at(0, 3) = beta_gamma * m.lambda;
  g.linear.at(3, 0) = beta_gamma / m.lambda;
  g.linear.at(3, 3) = gamma;
  return g;
}

Affine4 dilatation(const Scalar& lam) {
  if (sign(lam) <= 0) throw PreconditionError("dilatation factor must be > 0");
  Affine4 g;
  g.linear = lam * Mat4::identity();
  return g;
}

Affine4 time_inversion() {
  Affine4 g;
  g.linear.at(3, 3) = Scalar(-1);
  return g;
}

Affine4 galilei_boost(const Vec3& w) {
  Affine4 g;
  for (int i = 0; i < 3; ++i) g.linear.at(i, 3) = w[i];
  return g;
}

Affine4 translation(const Vec4& b) {
  Affine4 g;
  g.translation = b;
  return g;
}

bool conjugate_isotropy_check(const Affine4& lambda_map, const Affine4& g,
                              const Vec4& u, const MetricParams& m) {
  if (det(lambda_map.linear).is_zero())
    throw PreconditionError("conjugation requires an invertible map");
  const Vec4 lu = apply_linear(lambda_map, u);
  const bool lhs = member(g, GroupId::rest_isotropy(lu, m));
  const Affine4 conj = compose(affine_inverse(lambda_map), compose(g, lambda_map));
  const bool rhs = member(conj, GroupId::rest_isotropy(u, m));
  return lhs == rhs;
}

} // namespace relsim
