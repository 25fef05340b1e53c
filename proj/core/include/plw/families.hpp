#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plw/bundle.hpp"
#include "plw/rational.hpp"

namespace plw {

// Parameters for the parametric families; unset fields fall back to the
// family default. `alpha` must lie on the grid.
struct BuiltinParams {
  std::optional<int> n;
  std::optional<int> denominator;
  std::optional<Rational> alpha;
};

// Resolves a registry name ("ex4.22", "grid:ex2.8", "lea:mv4", "chain", ...)
// to its frozen bundle. Throws UnknownBuiltin / BadParams / GridNotClosed.
Bundle builtin(const std::string& id, const BuiltinParams& params = {});

// All registry names, in the order `plw builtin --list` prints them.
std::vector<std::string> builtin_names();

// Every non-parametric registry bundle plus the parametric ones at their
// default parameters (the "full builtin registry" the theorem suite runs on).
std::vector<Bundle> builtin_registry();

// The grid values of a denominator-d unit-interval grid, 0/d .. d/d.
std::vector<Rational> grid_values(int denominator);

// Grid lattice (a chain) with rational labels.
Lattice grid_lattice(int denominator);

}  // namespace plw
