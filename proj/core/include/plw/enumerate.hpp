#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "plw/bundle.hpp"
#include "plw/checkers.hpp"

namespace plw {

struct EnumerationTask {
  Lattice lattice;
  ClassTag target = ClassTag::ptnorm;   // ptnorm, ptconorm, tnorm, tconorm, sprl
  std::uint64_t cap = 1'000'000;        // >= 1
  bool symmetry_reduction = false;      // dedupe under lattice automorphisms
};

struct EnumerationResult {
  std::vector<Bundle> bundles;   // canonical representatives when reduced
  std::uint64_t count = 0;       // exact total (orbit-expanded when reduced)
  bool capped = false;           // true when the cap cut the listing short
};

// Depth-first table completion with unit-row forcing, upper-triangle
// commutativity and monotone propagation pruning. Deterministic order:
// cells row-major, cell states Undefined < element 0 < element 1 < ...
EnumerationResult enumerate_class(const EnumerationTask& task);

struct InferOptions {
  // size bound guard for the full order scan
  int max_size = 7;
  // when set, only this order is tested (used to replay frozen orders)
  std::optional<Lattice> restrict_to;
};

// All bounded-lattice orders on the tables' labelled carrier under which
// every claim checks out. Deterministic order: unordered middle pairs sorted
// lexicographically, states iterated incomparable < less-than < greater-than;
// candidate bottom/top are derived from claimed unit rows when possible.
// Throws NoConsistentOrder when the result would be empty.
std::vector<Lattice> infer_orders(const std::vector<std::string>& labels,
                                  const std::vector<std::pair<std::string, PartialOp>>& ops,
                                  const std::vector<std::pair<std::string, UnaryOp>>& unaries,
                                  const std::vector<Claim>& claims,
                                  const InferOptions& options = {});

}  // namespace plw
