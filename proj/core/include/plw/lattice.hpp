#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "plw/error.hpp"

namespace plw {

// Index of an element in a fixed lattice; valid only together with a lattice
// of matching size.
using Elem = int;

// A finite bounded lattice over labelled elements. Immutable after
// construction; meet/join tables are materialized eagerly.
class Lattice {
 public:
  Lattice() = default;  // empty placeholder; build via from_pairs/from_leq

  // Builds from an order given as label pairs (a <= b). The reflexive
  // transitive closure is taken. Throws NotAPoset / MissingBound.
  static Lattice from_pairs(std::vector<std::string> labels,
                            const std::vector<std::pair<std::string, std::string>>& pairs);

  // Builds from a reflexive relation matrix (closure is still applied).
  static Lattice from_leq(std::vector<std::string> labels, std::vector<std::uint8_t> leq);

  int size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Elem x) const { return labels_[x]; }
  Elem index_of(const std::string& label) const;  // throws UnknownElement

  bool le(Elem x, Elem y) const { return leq_[x * n_ + y] != 0; }
  bool lt(Elem x, Elem y) const { return x != y && le(x, y); }
  bool comparable(Elem x, Elem y) const { return le(x, y) || le(y, x); }

  Elem meet(Elem x, Elem y) const { return meet_[x * n_ + y]; }
  Elem join(Elem x, Elem y) const { return join_[x * n_ + y]; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  template <typename It>
  Elem join_all(It first, It last) const {
    Elem j = bottom_;
    for (; first != last; ++first) j = join(j, *first);
    return j;
  }
  template <typename It>
  Elem meet_all(It first, It last) const {
    Elem m = top_;
    for (; first != last; ++first) m = meet(m, *first);
    return m;
  }

  // Covering pairs (x, y): x < y with nothing strictly between.
  std::vector<std::pair<Elem, Elem>> cover_pairs() const;

  // All a with bottom < a <= x and no b with bottom < b < a.
  std::vector<Elem> atoms_below(Elem x) const;

  // True iff the down-set of x is totally ordered.
  bool interval_is_chain(Elem x) const;

  // Order reversed; bottom/top and meet/join swap roles. Labels are kept.
  Lattice dual() const;

  // Order automorphisms as permutations (identity first, lexicographic).
  std::vector<std::vector<Elem>> automorphisms() const;

  bool same_order(const Lattice& other) const { return n_ == other.n_ && leq_ == other.leq_; }

 private:
  void finish();  // closure done; checks antisymmetry, bounds, meets/joins

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

// A total unary operation table (negation, complement).
struct UnaryOp {
  std::vector<Elem> image;

  int size() const { return static_cast<int>(image.size()); }
  Elem operator()(Elem x) const { return image[x]; }
};

}  // namespace plw
