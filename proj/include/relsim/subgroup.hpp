#ifndef RELSIM_SUBGROUP_HPP
#define RELSIM_SUBGROUP_HPP

#include <string>
#include <vector>

#include "relsim/scalar.hpp"

namespace relsim {

// Finitely generated additive subgroup of R with generators in Q(sqrt 2).
// Zero entries in a generator list are stripped at construction.
struct RealSubgroupSpec {
  enum class Tag { Zero, Cyclic, Generated, Full };

  Tag tag = Tag::Zero;
  Scalar cyclic_gen;          // Tag::Cyclic, strictly positive
  std::vector<Scalar> gens;   // Tag::Generated, nonzero entries

  static RealSubgroupSpec zero() { return {}; }
  static RealSubgroupSpec full() { return {Tag::Full, Scalar(), {}}; }
  static RealSubgroupSpec cyclic(Scalar a);
  static RealSubgroupSpec generated(std::vector<Scalar> gens);
};

enum class SubgroupKind { Zero, Cyclic, Dense, Full };

struct SubgroupClass {
  SubgroupKind kind = SubgroupKind::Zero;
  Scalar generator; // for Cyclic: the positive generator
};

std::string to_string(SubgroupKind k);

// Finitely generated subgroups of R are free of rank <= 2 over our field:
// rank 0 is {0}, rank 1 is Z a for the positive gcd generator a, rank 2 is
// everywhere dense. The rank is the Q-rank of the generators' coefficient
// pairs, since {1, sqrt 2} is a Q-basis.
SubgroupClass classify_subgroup(const RealSubgroupSpec& s);

// Exact membership of h in the subgroup.
bool subgroup_contains(const RealSubgroupSpec& s, const Scalar& h);

// "zero" | "full" | "cyclic:<scalar>" | "gen:<scalar>;<scalar>;..."
RealSubgroupSpec parse_subgroup(std::string_view text);
std::string format_subgroup(const RealSubgroupSpec& s);

} // namespace relsim

#endif
