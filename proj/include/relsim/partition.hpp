#ifndef RELSIM_PARTITION_HPP
#define RELSIM_PARTITION_HPP

#include <iosfwd>
#include <vector>

#include "relsim/event_set.hpp"

namespace relsim {

// Equivalence relation on a finite event set, stored as a union-find forest
// with union by size and path compression. Queries compress paths, so a
// single partition is not safe for concurrent access; the partition itself
// never changes under queries. Block representatives are the smallest index
// in the block, which keeps every report deterministic.
class FinitePartition {
public:
  explicit FinitePartition(EventSetPtr base);

  static FinitePartition bottom(EventSetPtr base); // all singletons (I)
  static FinitePartition top(EventSetPtr base);    // one block (T)

  const EventSetPtr& base() const { return base_; }
  size_t size() const { return parent_.size(); }

  bool same(size_t i, size_t j) const;
  void relate(size_t i, size_t j);

  // Smallest index in i's block.
  size_t representative(size_t i) const;

  size_t block_count() const;

  // Blocks as sorted index lists, ordered by their representative.
  std::vector<std::vector<size_t>> blocks() const;

  // Structural equality of the induced partitions (bases must match).
  friend bool operator==(const FinitePartition& a, const FinitePartition& b);

private:
  size_t find(size_t i) const;

  EventSetPtr base_;
  mutable std::vector<size_t> parent_;
  std::vector<size_t> size_;
  std::vector<size_t> min_index_;
};

// Lattice operations; both arguments must share the same base EventSet
// object (DomainError otherwise).
FinitePartition meet(const FinitePartition& r1, const FinitePartition& r2);
FinitePartition join(const FinitePartition& r1, const FinitePartition& r2);
bool finer_than(const FinitePartition& r1, const FinitePartition& r2);

enum class InducedPolicy { Strict, Partial };

// The induced relation g.R: p (g.R) q iff (g^-1 p) R (g^-1 q), restricted to
// the base set. Strict policy requires g to permute the base set and throws
// PreconditionError naming the first escaping event otherwise; partial
// policy keeps only pairs whose preimages stay inside.
FinitePartition induced(const Affine4& g, const FinitePartition& r, InducedPolicy policy);

struct ClosureResult {
  FinitePartition partition;
  bool converged = false;
  int rounds = 0;
};

// Least fixpoint of R |-> R v \/_g (g.R) over the generators and their
// inverses, within max_rounds sweeps.
ClosureResult invariant_closure(const FinitePartition& r,
                                const std::vector<Affine4>& generators,
                                InducedPolicy policy, int max_rounds);

// Relation file format: lines `id1 id2` over a named event file; reflexive
// closure implied, '#' comments allowed.
FinitePartition read_relation(std::istream& in, const std::string& source_name,
                              EventSetPtr base);
FinitePartition load_relation_file(const std::string& path, EventSetPtr base);

void write_blocks(std::ostream& out, const FinitePartition& p);

} // namespace relsim

#endif
