#ifndef RELSIM_COORDS_HPP
#define RELSIM_COORDS_HPP

#include <optional>
#include <string>

#include "relsim/spacetime.hpp"

namespace relsim {

// Inertial coordinate system with isotropic two-way light speed, given by
// the transition from Minkowski coordinates
//     r' = lam * A * r,   t' = lam * (t + k . (A r)),
// with lam > 0, A exactly orthogonal and |k|^2 < 1/c^2. k is the synchrony
// vector; k = 0 is standard synchrony up to scale and rotation.
struct InertialCoords {
  Scalar lam;
  Vec3 k;
  Mat3 a;
  MetricParams m; // carries c

  InertialCoords(Scalar lam_, Vec3 k_, Mat3 a_, MetricParams m_);

  static InertialCoords identity(MetricParams m);
};

Event to_prime(const InertialCoords& phi, const Event& p);
Event from_prime(const InertialCoords& phi, const Event& p_prime);

// Coordinate speed in phi of a light signal along image direction A n,
// for an exactly-unit direction n: c / (1 + c * (k . A n)).
Scalar one_way_speed(const InertialCoords& phi, const Vec3& n);

// Harmonic mean of the two opposite one-way speeds; equals c for every
// valid system.
Scalar two_way_speed(const InertialCoords& phi, const Vec3& n);

// p is causally M-connectible to q according to phi: the coordinate
// difference is future timelike or null.
bool m_connectible(const InertialCoords& phi, const Event& p, const Event& q);

// A 3-velocity v with |v| = c violating |v| <= c (1 + k . A v); exists iff
// k != 0. The exact direction -A^T k is used when its norm is a perfect
// square in the field; otherwise rational unit directions are searched
// (violation is an open condition, so the search terminates).
std::optional<Vec3> causality_witness(const InertialCoords& phi);

// Symmetric matrix of the quadratic form vanishing exactly on the phi-image
// of the standard light cone: |r'|^2 - c^2 (t' - k . r')^2.
Mat4 lightcone_image(const InertialCoords& phi);

// `coords lambda=<S> k=(<S>,<S>,<S>) A=cayley(<S>,<S>,<S>) c=<S>`
// (the leading word `coords` is optional).
InertialCoords parse_coords(const std::string& text);

} // namespace relsim

#endif
