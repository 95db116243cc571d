#ifndef RELSIM_RELATION_HPP
#define RELSIM_RELATION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relsim/groups.hpp"
#include "relsim/partition.hpp"
#include "relsim/subgroup.hpp"

namespace relsim {

// Intensional description of an equivalence relation on all of R^4, one per
// classified family:
//   Total / Identity      trivial relations T and I
//   NewtonTypeI(H)        classes x + ({0} x H)
//   NewtonTypeII(H)       classes x + (R^3 x H)
//   PencilTypeI(u, H)     classes x + H u
//   PencilTypeII(u, H)    classes x + (<u>-perp + H u)
//   StandardSim(u)        x ~ y iff x - y is g-orthogonal to u
//   HalfCone(c_hat, +/-)  translated half-cones along the line o + R e4
//   Coset(gens, base, n)  orbit relation of the subgroup generated by gens,
//                         decided by word search of length <= n
struct RelationSpec {
  enum class Kind {
    Total,
    Identity,
    NewtonTypeI,
    NewtonTypeII,
    PencilTypeI,
    PencilTypeII,
    StandardSim,
    HalfCone,
    Coset,
  };

  Kind kind = Kind::Identity;
  RealSubgroupSpec subgroup;              // Newton/Pencil families
  Vec4 u;                                 // Pencil/StandardSim
  std::optional<MetricParams> metric;     // Pencil/StandardSim
  Scalar cone_aperture;                   // HalfCone: c_hat > 0
  int cone_sign = +1;                     // HalfCone: +1 upper, -1 lower
  std::vector<Affine4> coset_generators;  // Coset
  Event coset_base;                       // Coset
  int word_bound = 0;                     // Coset

  static RelationSpec total();
  static RelationSpec identity();
  static RelationSpec newton_type1(RealSubgroupSpec h);
  static RelationSpec newton_type2(RealSubgroupSpec h);
  static RelationSpec pencil_type1(Vec4 u, RealSubgroupSpec h, MetricParams m);
  static RelationSpec pencil_type2(Vec4 u, RealSubgroupSpec h, MetricParams m);
  static RelationSpec standard_sim(Vec4 u, MetricParams m);
  static RelationSpec half_cone(Scalar c_hat, int sign_tag);
  static RelationSpec coset(std::vector<Affine4> gens, Event base, int word_bound);
};

// Membership answers are exact except for Coset, whose bounded word search
// may come back inconclusive.
struct RelAnswer {
  bool related = false;
  bool decided = true; // false = bound-exhausted (Coset only)
};

RelAnswer related(const RelationSpec& spec, const Event& p, const Event& q);

// Trace of the relation on a finite event set. Throws ParseError-family
// errors on undecidable Coset pairs (naming the pair) and reports an
// internal invariant failure if the pairwise trace is not transitive.
FinitePartition restrict_to(const RelationSpec& spec, EventSetPtr x);

struct CausalityCheck {
  bool ok = true;
  std::optional<std::pair<std::string, std::string>> violation; // event ids
};

// Scans all related pairs of the restriction; reports the first pair (in
// index order) that is both related and causally connectible.
CausalityCheck satisfies_causality(const RelationSpec& spec, const EventSetPtr& x,
                                   const CausalKind& kind);

// Single-line text format, e.g.:
//   total | identity
//   newton1 H=cyclic:1/6        | newton2 H=gen:1;0+1*r2
//   pencil1 u=(0,0,0,1) H=zero lambda=1
//   pencil2 u=(3/4,0,0,5/4) H=zero lambda=1
//   stdsim u=(0,0,0,1) lambda=1
//   halfcone c=1 sign=+
RelationSpec parse_relation_spec(const std::string& text);

} // namespace relsim

#endif
