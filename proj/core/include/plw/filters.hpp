#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plw/bundle.hpp"
#include "plw/partial_op.hpp"
#include "plw/report.hpp"

namespace plw {

struct FilterSet {
  std::vector<Elem> members;  // sorted
  bool proper = true;

  bool operator==(const FilterSet&) const = default;
};

struct FilterVerdict {
  bool ok = true;
  std::vector<Witness> witnesses;  // F1/F2/F3 or s1..s4 tags
};

// F1 (top in F), F2 (up-closed), F3 (closed under defined products).
FilterVerdict is_filter(const Lattice& L, const PartialOp& otimes, const std::vector<Elem>& F);

// All filters, in subset-size then lexicographic order; searches up-sets only.
std::vector<FilterSet> enumerate_filters(const Lattice& L, const PartialOp& otimes);

// s1-s4 with their literal definedness guards. Requires is_filter; throws
// NotAFilter otherwise. Witnesses carry all failing (axiom, x, y, z) tuples.
FilterVerdict is_strong_filter(const Lattice& L, const PartialOp& otimes, const PartialOp& arrow,
                               const std::vector<Elem>& F);

std::vector<FilterSet> enumerate_strong_filters(const Lattice& L, const PartialOp& otimes,
                                                const PartialOp& arrow);

// Modus-ponens closure: x in F, x->y defined and in F imply y in F.
FilterVerdict mp_closed(const Lattice& L, const PartialOp& arrow, const std::vector<Elem>& F);

struct Partition {
  std::vector<std::vector<Elem>> blocks;  // each sorted, ordered by least member
  std::vector<int> block_of;

  int block_count() const { return static_cast<int>(blocks.size()); }
};

// x ~F y iff x->y in F and y->x in F (undefined counts as "not in F").
// Returns the partition when the relation is an equivalence, otherwise the
// witness of the failed equivalence property ("refl"/"sym"/"trans").
struct SimResult {
  std::optional<Partition> partition;
  std::optional<Witness> failure;
};
SimResult sim_relation(const Lattice& L, const PartialOp& arrow, const std::vector<Elem>& F);

// C2/C3 compatibility of a partition with the defined parts of otimes/arrow.
FilterVerdict is_congruence(const Lattice& L, const PartialOp& otimes, const PartialOp& arrow,
                            const Partition& P);

struct QuotientStructure {
  Lattice lattice;
  PartialOp otimes;
  PartialOp arrow;
  Partition partition;
  std::vector<Elem> filter;
  // Whether "[x] <= [y] iff [x]->[y] = [1]" held wherever the quotient arrow
  // is defined (the paper's characterization; reported, not required).
  bool arrow_order_consistent = true;
};

// Builds the quotient by ~F. Gated on sim_relation being an equivalence and
// is_congruence passing (throws NotEquivalence / NotACongruence /
// QuotientOrderNotLattice).
QuotientStructure build_quotient(const Lattice& L, const PartialOp& otimes, const PartialOp& arrow,
                                 const std::vector<Elem>& F);

// Prop 6.15 under the paper's blanket definedness proviso: whenever x*y,
// (x*y)->z, y->z and x->(y->z) are all defined and (x*y)->z in F, then
// x->(y->z) in F.
FilterVerdict mp_implies_currying(const Lattice& L, const PartialOp& otimes, const PartialOp& arrow,
                                  const std::vector<Elem>& F);

}  // namespace plw
