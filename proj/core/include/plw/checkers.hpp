#pragma once

#include <optional>

#include "plw/bundle.hpp"
#include "plw/partial_op.hpp"
#include "plw/report.hpp"

namespace plw {

// One checker per structure class. Each returns a CheckReport with one entry
// per axiom and a lexicographically minimal witness on failure. Input-contract
// violations (e.g. a non-total arrow where the definition demands a full
// operation) throw plw::Error instead.

CheckReport check_partial_tnorm(const Lattice& L, const PartialOp& op);
CheckReport check_partial_tconorm(const Lattice& L, const PartialOp& op);
CheckReport check_tnorm(const Lattice& L, const PartialOp& op);     // total + ptnorm axioms
CheckReport check_tconorm(const Lattice& L, const PartialOp& op);

CheckReport check_negation(const Lattice& L, const UnaryOp& N);
CheckReport check_fuzzy_implication(const Lattice& L, const PartialOp& I);   // throws NotTotal
CheckReport check_partial_fuzzy_implication(const Lattice& L, const PartialOp& PI);  // throws BoundaryUndefined

CheckReport check_pap(const Lattice& L, const PartialOp& otimes, const PartialOp& arrow);
CheckReport check_prl(const Lattice& L, const PartialOp& otimes, const PartialOp& arrow);
CheckReport check_sprl(const Lattice& L, const PartialOp& otimes, const PartialOp& arrow);
CheckReport check_wprl(const Lattice& L, const PartialOp& otimes, const PartialOp& arrow);
CheckReport check_residuated_lattice(const Lattice& L, const PartialOp& otimes,
                                     const PartialOp& arrow);

CheckReport check_coadjoint(const Lattice& L, const PartialOp& oplus, const PartialOp& ominus);  // throws NotTotal
CheckReport check_corl(const Lattice& L, const PartialOp& oplus, const PartialOp& ominus);       // throws NotTotal
CheckReport check_pcrl(const Lattice& L, const PartialOp& odot, const PartialOp& leadsto);
CheckReport check_zl_prl(const Lattice& L, const PartialOp& oplus, const PartialOp& ominus);

// Effect algebra over the +-derived order. The report also carries the "lea"
// entry stating whether that order is a lattice; `derived` (when non-null)
// receives the order when it is at least a poset.
CheckReport check_effect_algebra(const Lattice& carrier, const PartialOp& plus, const UnaryOp& comp,
                                 std::optional<Lattice>* derived = nullptr);

CheckReport check_quasiresiduated(const Lattice& L, const PartialOp& odot, const PartialOp& arrow,
                                  const UnaryOp& comp);  // throws ArrowNotTotal

// Dispatch on a bundle claim.
CheckReport check_claim(const Bundle& b, const Claim& c);

// Re-evaluates a witness against the axiom it cites; true iff the cited axiom
// is indeed violated at that tuple (used by the witness-replay property).
bool replay_witness(const Bundle& b, const Claim& c, const Witness& w);

}  // namespace plw
