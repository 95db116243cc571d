#ifndef RELSIM_VERIFIERS_HPP
#define RELSIM_VERIFIERS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "relsim/coords.hpp"
#include "relsim/relation.hpp"
#include "relsim/report.hpp"

namespace relsim {

// One verifier per classified result. Each reduces its statement to exact
// finite checks and constructive witnesses; floating point appears only in
// the cross-check oracles that say so in their sub-check names.

// Bounded witness search for the rotation-span lemma: expresses each target
// as an integer combination of rotated copies of b with coefficient 1-norm
// at most `depth`. Unreached targets fail as inconclusive-at-depth.
struct RotationSpanInstance {
  Vec3 b;
  std::vector<Mat3> rotations;
  std::vector<Vec3> targets;
  int depth = 8;
};
TheoremReport verify_rotation_span(const RotationSpanInstance& inst, std::uint64_t seed);

// Invariance of the two Newton-type families on a rotation-closed event set,
// plus the boost witness that kills the worldline-type family under the
// Galilei group.
TheoremReport verify_newton_family(const RealSubgroupSpec& h, const EventSetPtr& x,
                                   std::uint64_t seed);

enum class ConformalKind { Newton, Galilei, RestIsotropy };

// Uniqueness of standard synchrony under the conformal groups: a dilatation
// witness breaks every H != {0} family, the H = {0} family survives.
TheoremReport verify_conformal_uniqueness(ConformalKind kind, const RealSubgroupSpec& h,
                                          std::uint64_t seed);

// No nontrivial invariant relation under the full proper orthochronous
// Poincare group: a boost pushes the hyperplane family off the subgroup H.
TheoremReport verify_poincare_nogo(const RealSubgroupSpec& h, const Affine4& boost,
                                   const MetricParams& m, std::uint64_t seed);

// Join of two standard synchronies is total (constructive chain through the
// solved intermediate point), meet of four independent ones is the identity.
TheoremReport verify_join_meet(const Vec4& u1, const Vec4& u2,
                               const std::array<Vec4, 4>& vs, const Event& x,
                               const Scalar& s, const MetricParams& m,
                               std::uint64_t seed);

// Rest-pencil isotropy checks: both pencil families invariant, conjugation
// identities for the isotropy groups, dilatation uniqueness for standard
// synchrony.
TheoremReport verify_rest_isotropy(const Vec4& u, const MetricParams& m,
                                   std::uint64_t seed);

// Causality: k = 0 systems agree with Minkowski causal order; k != 0 systems
// admit an exact witness velocity and an event pair that is connectible in
// Minkowski coordinates but not M-connectible in the primed system. Also the
// classical census: among the Newton families only absolute simultaneity
// satisfies the causality condition.
TheoremReport verify_causality(const InertialCoords& phi, const EventSetPtr& x,
                               std::uint64_t seed);

// Forward direction of causal-order preservation for conformal orthochronous
// Poincare maps.
TheoremReport verify_alexandrov_forward(const Affine4& g, const EventSetPtr& x,
                                        const MetricParams& m, std::uint64_t seed);

// Half-cone classification along a timelike line: invariance under the
// conformal-Newton line stabilizer, collapse to the total relation once time
// inversion is adjoined, survival of standard synchrony, destruction of a
// tilted-hyperplane rival.
TheoremReport verify_malament(const Scalar& c_hat, const EventSetPtr& x,
                              std::uint64_t seed);

// Unique-representative variant without dilatations: the translation/time
// inversion chain forces (0,s) ~ (0,-s) for any off-line equivalence.
TheoremReport verify_hogarth(const EventSetPtr& x, std::uint64_t seed);

// Cross-validation of the subgroup classifier against the bounded
// combination float oracle (gap check for cyclic verdicts, interval hits for
// dense verdicts).
TheoremReport verify_appendix(const std::vector<Scalar>& gens, int probes,
                              std::uint64_t seed);

// ---- suite ----

struct SuiteConfig {
  std::vector<std::string> selection; // empty or {"all"}: everything
  std::uint64_t seed = 0;
};

const std::vector<std::string>& suite_ids();
std::vector<TheoremReport> run_suite(const SuiteConfig& config);

// The fixed instances the shipped suite runs on.
namespace suite_defaults {
EventSetPtr newton_orbit();       // closed under the 90-degree rotations
EventSetPtr malament_orbit();     // 200 events, closed under the same
EventSetPtr causality_events();
EventSetPtr random_events(std::uint64_t seed, size_t count, const std::string& prefix);
std::vector<std::vector<Scalar>> subgroup_generator_lists(); // 50 lists
RotationSpanInstance rotation_span_instance();
} // namespace suite_defaults

} // namespace relsim

#endif
