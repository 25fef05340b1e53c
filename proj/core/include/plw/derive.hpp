#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "plw/bundle.hpp"
#include "plw/partial_op.hpp"
#include "plw/rational.hpp"

namespace plw {

enum class EmptySup { Undefined, Bottom };

struct DeriveOptions {
  bool require_tnorm = true;   // validate the input against its class first
  EmptySup empty_sup = EmptySup::Undefined;
};

// Per-cell diagnostics keyed by (row, col).
using CellNotes = std::map<std::pair<Elem, Elem>, std::string>;

struct DerivationOutcome {
  PartialOp op;
  CellNotes notes;  // "S-empty", "sup-not-attained", "I-empty", "inf-not-attained"
};

// Sup-based partial residuated implication of a partial t-norm:
// cell (a,b) = sup{x : a*x defined and a*x <= b} when that set is nonempty.
// Throws NotAPartialTnorm when options.require_tnorm and the check fails.
DerivationOutcome derive_pri(const Lattice& L, const PartialOp& tnorm,
                             const DeriveOptions& options = {});

// Inf-based co-implication of a partial t-conorm.
DerivationOutcome derive_prci(const Lattice& L, const PartialOp& tconorm,
                              const DeriveOptions& options = {});

// A lattice effect algebra presented by its +-table and complement, together
// with its derived order. Construction validates E1-E4 and the lattice
// property; throws NotAnLEA otherwise.
class EffectAlgebra {
 public:
  EffectAlgebra(Lattice carrier_order, PartialOp plus, UnaryOp comp);
  static EffectAlgebra from_bundle(const Bundle& b, const std::string& plus_name = "plus",
                                   const std::string& comp_name = "comp");

  const Lattice& order() const { return order_; }
  const PartialOp& plus() const { return plus_; }
  const UnaryOp& comp() const { return comp_; }
  int size() const { return order_.size(); }

  // y - x := z iff x + z = y (partial difference).
  Cell minus(Elem y, Elem x) const;

 private:
  Lattice order_;
  PartialOp plus_;
  UnaryOp comp_;
};

// x . y := (x' + y')' iff x' <= y; passes check_partial_tnorm on every LEA.
PartialOp lea_tnorm(const EffectAlgebra& E);

// Bundle carrying lea_tnorm and x -> y := x' + y iff y <= x, claimed prl.
Bundle lea_prl(const EffectAlgebra& E, const std::string& name = "lea-prl");

// Sasaki arrow x ->s y := x' + (x ^ y); always defined.
PartialOp sasaki_arrow(const EffectAlgebra& E);

// Example-3.3 style implication: top if x <= y; a' when [0,x] is a chain with
// atom a and x - (x ^ y) = a; bottom otherwise.
PartialOp is_implication(const EffectAlgebra& E);

// PI_N(u,v) := PI(N(v), N(u)) where defined; validates inputs.
PartialOp pfi_reciprocal(const Lattice& L, const PartialOp& PI, const UnaryOp& N,
                         bool validate = true);

// min{ PI(x,y) v N(x), PI_N(x,y) v y } where both inner cells are defined.
PartialOp pfi_min_combine(const Lattice& L, const PartialOp& PI, const UnaryOp& N,
                          bool validate = true);

// Vertical splice on a rational grid: 1 at u=0; a*PI1(u, v/a) for 0<u, v<=a;
// a+(1-a)*PI2(u, (v-a)/(1-a)) for 0<u, a<v; undefined when the rescaled inner
// point falls off the grid. Throws GridNotClosed if `a` is not a grid point.
PartialOp pfi_vertical_splice(const Lattice& L, const std::vector<Rational>& grid,
                              const PartialOp& PI1, const PartialOp& PI2, const Rational& a);

// Reads a zL-PRL bundle (ops oplus/ominus) as a partial co-residuated lattice.
// The mathematical content is untouched: the zL presentation already carries
// its unit at the lattice bottom, which is what cPRL3 requires, so the bundle
// is re-claimed rather than order-reversed (see README on theta/iota).
Bundle dualize_to_pcrl(const Bundle& zl, const std::string& oplus = "oplus",
                       const std::string& ominus = "ominus");

}  // namespace plw
