#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "plw/lattice.hpp"
#include "plw/report.hpp"

namespace plw {

using Cell = std::optional<Elem>;

// An n x n table of defined-or-undefined cells. Undefined is a distinct cell
// state; bottom is a legitimate value in many tables.
class PartialOp {
 public:
  PartialOp() = default;
  explicit PartialOp(int n) : n_(n), cells_(static_cast<size_t>(n) * n) {}
  PartialOp(int n, std::vector<Cell> cells) : n_(n), cells_(std::move(cells)) {}

  int size() const { return n_; }
  Cell at(Elem x, Elem y) const { return cells_[x * n_ + y]; }
  void set(Elem x, Elem y, Cell v) { cells_[x * n_ + y] = v; }
  bool defined(Elem x, Elem y) const { return cells_[x * n_ + y].has_value(); }
  Elem value(Elem x, Elem y) const { return *cells_[x * n_ + y]; }
  const std::vector<Cell>& cells() const { return cells_; }

  bool operator==(const PartialOp& o) const { return n_ == o.n_ && cells_ == o.cells_; }

 private:
  int n_ = 0;
  std::vector<Cell> cells_;
};

// Returns the cell verbatim.
inline Cell apply(const PartialOp& op, Elem x, Elem y) { return op.at(x, y); }

bool is_total(const PartialOp& op);

// Axiom fragments used by several class checkers. Each returns a CheckItem
// whose witnesses (if any) are lexicographically minimal.

// defined(x,y) implies defined(y,x) with equal value.
CheckItem commutative_partial(const Lattice& L, const PartialOp& op, const std::string& axiom);

// If y*z and x*(y*z) are defined, then x*y and (x*y)*z are defined and equal.
CheckItem associative_directional(const Lattice& L, const PartialOp& op, const std::string& axiom);

// x*y and (x*y)*z defined iff y*z and x*(y*z) defined, and then equal.
CheckItem associative_iff(const Lattice& L, const PartialOp& op, const std::string& axiom);

// Plain total associativity (precondition: total op).
CheckItem associative_total(const Lattice& L, const PartialOp& op, const std::string& axiom);

// x<=y, h<=k, x*h and y*k defined imply x*h <= y*k.
CheckItem monotone_partial(const Lattice& L, const PartialOp& op, const std::string& axiom);

// cell (x, unit_side) == x for all x. `left_unit` checks (unit, x).
CheckItem unit_law(const Lattice& L, const PartialOp& op, Elem unit, bool left_unit,
                   const std::string& axiom);

// Cells outside sub x sub are dropped; defined cells whose value falls outside
// sub become Undefined and are reported via `escaped` (x, y, value in parent
// indices). The returned op is indexed by position in `sub`.
PartialOp restrict_op(const PartialOp& op, const std::vector<Elem>& sub,
                      std::vector<std::array<Elem, 3>>* escaped = nullptr);

// The sublattice induced on `sub` (must itself be a bounded lattice).
Lattice restrict_lattice(const Lattice& L, const std::vector<Elem>& sub);

}  // namespace plw
