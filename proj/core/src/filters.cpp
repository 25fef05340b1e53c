#include "plw/filters.hpp"

#include <algorithm>
#include <numeric>

namespace plw {

namespace {

bool contains(const std::vector<Elem>& F, Elem x) {
  return std::binary_search(F.begin(), F.end(), x);
}

bool in_filter(const PartialOp& ar, const std::vector<Elem>& F, Elem x, Elem y) {
  return ar.defined(x, y) && contains(F, ar.value(x, y));
}

}  // namespace

FilterVerdict is_filter(const Lattice& L, const PartialOp& ot, const std::vector<Elem>& F) {
  FilterVerdict v;
  if (!contains(F, L.top())) {
    v.ok = false;
    v.witnesses.push_back({"F1", {L.top()}});
    return v;
  }
  for (Elem x : F)
    for (Elem y = 0; y < L.size(); ++y)
      if (L.le(x, y) && !contains(F, y)) {
        v.ok = false;
        v.witnesses.push_back({"F2", {x, y}});
        return v;
      }
  for (Elem x : F)
    for (Elem y : F)
      if (ot.defined(x, y) && !contains(F, ot.value(x, y))) {
        v.ok = false;
        v.witnesses.push_back({"F3", {x, y}});
        return v;
      }
  return v;
}

std::vector<FilterSet> enumerate_filters(const Lattice& L, const PartialOp& ot) {
  const int n = L.size();
  if (n > 24) throw Error(Errc::BadParams, "filter enumeration supported up to 24 elements");
  // filters are up-closed: search unions of principal up-sets
  std::vector<std::uint32_t> up(n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (L.le(x, y)) up[x] |= 1u << y;
  std::vector<std::uint32_t> seen;
  std::vector<FilterSet> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::uint32_t closure = 0;
    for (Elem x = 0; x < n; ++x)
      if (mask >> x & 1u) closure |= up[x];
    if (closure != mask) continue;
    std::vector<Elem> F;
    for (Elem x = 0; x < n; ++x)
      if (mask >> x & 1u) F.push_back(x);
    if (!is_filter(L, ot, F).ok) continue;
    out.push_back({F, static_cast<int>(F.size()) != n});
  }
  std::sort(out.begin(), out.end(), [](const FilterSet& a, const FilterSet& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

FilterVerdict is_strong_filter(const Lattice& L, const PartialOp& ot, const PartialOp& ar,
                               const std::vector<Elem>& F) {
  if (!is_filter(L, ot, F).ok) throw Error(Errc::NotAFilter, "strong-filter check on a non-filter");
  const int n = L.size();
  FilterVerdict v;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        // (s1) z->x, z->y defined, x->y in F  =>  (z->x)->(z->y) in F
        if (ar.defined(z, x) && ar.defined(z, y) && in_filter(ar, F, x, y) &&
            !in_filter(ar, F, ar.value(z, x), ar.value(z, y)))
          v.witnesses.push_back({"s1", {x, y, z}});
        // (s2) y->z, x->z defined, x->y in F  =>  (y->z)->(x->z) in F
        if (ar.defined(y, z) && ar.defined(x, z) && in_filter(ar, F, x, y) &&
            !in_filter(ar, F, ar.value(y, z), ar.value(x, z)))
          v.witnesses.push_back({"s2", {x, y, z}});
        // (s3) (x*y)->z defined, x->(y->z) in F  =>  (x*y)->z in F
        if (ot.defined(x, y) && ar.defined(ot.value(x, y), z) && ar.defined(y, z) &&
            in_filter(ar, F, x, ar.value(y, z)) &&
            !contains(F, ar.value(ot.value(x, y), z)))
          v.witnesses.push_back({"s3", {x, y, z}});
        // (s4) x*z, y*z defined, x->y in F  =>  (x*z)->(y*z) in F
        if (ot.defined(x, z) && ot.defined(y, z) && in_filter(ar, F, x, y) &&
            !in_filter(ar, F, ot.value(x, z), ot.value(y, z)))
          v.witnesses.push_back({"s4", {x, y, z}});
      }
  v.ok = v.witnesses.empty();
  return v;
}

std::vector<FilterSet> enumerate_strong_filters(const Lattice& L, const PartialOp& ot,
                                                const PartialOp& ar) {
  std::vector<FilterSet> out;
  for (const FilterSet& F : enumerate_filters(L, ot))
    if (is_strong_filter(L, ot, ar, F.members).ok) out.push_back(F);
  return out;
}

FilterVerdict mp_closed(const Lattice& L, const PartialOp& ar, const std::vector<Elem>& F) {
  FilterVerdict v;
  for (Elem x : F)
    for (Elem y = 0; y < L.size(); ++y)
      if (in_filter(ar, F, x, y) && !contains(F, y)) {
        v.ok = false;
        v.witnesses.push_back({"mp", {x, y}});
        return v;
      }
  return v;
}

SimResult sim_relation(const Lattice& L, const PartialOp& ar, const std::vector<Elem>& F) {
  const int n = L.size();
  std::vector<std::uint8_t> rel(static_cast<size_t>(n) * n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      rel[x * n + y] = in_filter(ar, F, x, y) && in_filter(ar, F, y, x);
  SimResult res;
  for (Elem x = 0; x < n; ++x)
    if (!rel[x * n + x]) {
      res.failure = Witness{"refl", {x}};
      return res;
    }
  // symmetric by construction
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (rel[x * n + y] && rel[y * n + z] && !rel[x * n + z]) {
          res.failure = Witness{"trans", {x, y, z}};
          return res;
        }
  Partition P;
  P.block_of.assign(n, -1);
  for (Elem x = 0; x < n; ++x) {
    if (P.block_of[x] >= 0) continue;
    std::vector<Elem> block;
    for (Elem y = 0; y < n; ++y)
      if (rel[x * n + y]) {
        block.push_back(y);
        P.block_of[y] = static_cast<int>(P.blocks.size());
      }
    P.blocks.push_back(std::move(block));
  }
  res.partition = std::move(P);
  return res;
}

FilterVerdict is_congruence(const Lattice& L, const PartialOp& ot, const PartialOp& ar,
                            const Partition& P) {
  const int n = L.size();
  FilterVerdict v;
  const auto& bo = P.block_of;
  for (Elem x = 0; x < n; ++x)
    for (Elem x1 = 0; x1 < n; ++x1) {
      if (bo[x] != bo[x1]) continue;
      for (Elem y = 0; y < n; ++y)
        for (Elem y1 = 0; y1 < n; ++y1) {
          if (bo[y] != bo[y1]) continue;
          if (ot.defined(x, y) && ot.defined(x1, y1) &&
              bo[ot.value(x, y)] != bo[ot.value(x1, y1)]) {
            v.ok = false;
            v.witnesses.push_back({"C2", {x, y, x1, y1}});
            return v;
          }
          if (ar.defined(x, y) && ar.defined(x1, y1) &&
              bo[ar.value(x, y)] != bo[ar.value(x1, y1)]) {
            v.ok = false;
            v.witnesses.push_back({"C3", {x, y, x1, y1}});
            return v;
          }
        }
    }
  return v;
}

QuotientStructure build_quotient(const Lattice& L, const PartialOp& ot, const PartialOp& ar,
                                 const std::vector<Elem>& F) {
  SimResult sim = sim_relation(L, ar, F);
  if (!sim.partition)
    throw Error(Errc::NotEquivalence, "~F is not an equivalence (" + sim.failure->axiom + ")");
  Partition P = *sim.partition;
  FilterVerdict cong = is_congruence(L, ot, ar, P);
  if (!cong.ok) throw Error(Errc::NotACongruence, "~F is not compatible with the operations");

  const int m = P.block_count();
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = "[" + L.label(P.blocks[i].front()) + "]";
  // representative-wise order, then validated as a bounded lattice
  std::vector<std::uint8_t> leq(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      bool any = false;
      for (Elem a : P.blocks[i]) {
        for (Elem b : P.blocks[j])
          if (L.le(a, b)) { any = true; break; }
        if (any) break;
      }
      leq[i * m + j] = any;
    }
  Lattice Q = [&] {
    try {
      return Lattice::from_leq(labels, leq);
    } catch (const Error& e) {
      throw Error(Errc::QuotientOrderNotLattice, e.what());
    }
  }();

  const int topb = P.block_of[L.top()];
  PartialOp qot(m), qar(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      // [x](*)[y]: the [y]=[1] clause (and its commutative mirror) takes
      // precedence; otherwise the all-representatives-defined clause.
      if (j == topb) qot.set(i, j, i);
      else if (i == topb) qot.set(i, j, j);
      else {
        bool all = true;
        for (Elem a : P.blocks[i])
          for (Elem b : P.blocks[j])
            if (!ot.defined(a, b)) { all = false; }
        if (all) qot.set(i, j, P.block_of[ot.value(P.blocks[i][0], P.blocks[j][0])]);
      }
      bool all = true;
      for (Elem a : P.blocks[i])
        for (Elem b : P.blocks[j])
          if (!ar.defined(a, b)) { all = false; }
      if (all) qar.set(i, j, P.block_of[ar.value(P.blocks[i][0], P.blocks[j][0])]);
    }

  QuotientStructure q{std::move(Q), std::move(qot), std::move(qar), std::move(P), F, true};
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (q.arrow.defined(i, j) &&
          q.lattice.le(i, j) != (q.arrow.value(i, j) == q.lattice.top()))
        q.arrow_order_consistent = false;
  return q;
}

FilterVerdict mp_implies_currying(const Lattice& L, const PartialOp& ot, const PartialOp& ar,
                                  const std::vector<Elem>& F) {
  const int n = L.size();
  FilterVerdict v;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (!ot.defined(x, y)) continue;
      for (Elem z = 0; z < n; ++z) {
        if (!ar.defined(ot.value(x, y), z) || !contains(F, ar.value(ot.value(x, y), z))) continue;
        if (!ar.defined(y, z)) continue;
        const Elem yz = ar.value(y, z);
        if (!ar.defined(x, yz)) continue;
        if (!contains(F, ar.value(x, yz))) {
          v.ok = false;
          v.witnesses.push_back({"currying", {x, y, z}});
          return v;
        }
      }
    }
  return v;
}

}  // namespace plw
