#include "plw/derive.hpp"

#include <algorithm>

#include "plw/checkers.hpp"

namespace plw {

DerivationOutcome derive_pri(const Lattice& L, const PartialOp& tnorm,
                             const DeriveOptions& options) {
  if (options.require_tnorm) {
    CheckReport r = check_partial_tnorm(L, tnorm);
    if (!r.pass()) throw Error(Errc::NotAPartialTnorm, "input fails check_partial_tnorm");
  }
  const int n = L.size();
  DerivationOutcome out{PartialOp(n), {}};
  std::vector<Elem> S;
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      S.clear();
      for (Elem x = 0; x < n; ++x)
        if (tnorm.defined(a, x) && L.le(tnorm.value(a, x), b)) S.push_back(x);
      if (S.empty()) {
        if (options.empty_sup == EmptySup::Bottom) out.op.set(a, b, L.bottom());
        else out.notes[{a, b}] = "S-empty";
        continue;
      }
      const Elem s = L.join_all(S.begin(), S.end());
      out.op.set(a, b, s);
      if (std::find(S.begin(), S.end(), s) == S.end()) out.notes[{a, b}] = "sup-not-attained";
    }
  }
  return out;
}

DerivationOutcome derive_prci(const Lattice& L, const PartialOp& tconorm,
                              const DeriveOptions& options) {
  if (options.require_tnorm) {
    CheckReport r = check_partial_tconorm(L, tconorm);
    if (!r.pass()) throw Error(Errc::NotAPartialTconorm, "input fails check_partial_tconorm");
  }
  const int n = L.size();
  DerivationOutcome out{PartialOp(n), {}};
  std::vector<Elem> I;
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      I.clear();
      for (Elem x = 0; x < n; ++x)
        if (tconorm.defined(a, x) && L.le(b, tconorm.value(a, x))) I.push_back(x);
      if (I.empty()) {
        out.notes[{a, b}] = "I-empty";
        continue;
      }
      const Elem s = L.meet_all(I.begin(), I.end());
      out.op.set(a, b, s);
      if (std::find(I.begin(), I.end(), s) == I.end()) out.notes[{a, b}] = "inf-not-attained";
    }
  }
  return out;
}

EffectAlgebra::EffectAlgebra(Lattice carrier_order, PartialOp plus, UnaryOp comp)
    : order_(std::move(carrier_order)), plus_(std::move(plus)), comp_(std::move(comp)) {
  std::optional<Lattice> derived;
  CheckReport r = check_effect_algebra(order_, plus_, comp_, &derived);
  if (!r.pass() || !derived)
    throw Error(Errc::NotAnLEA, "structure fails the effect-algebra axioms or is not a lattice");
  if (!derived->same_order(order_))
    throw Error(Errc::NotAnLEA, "carrier order differs from the +-derived order");
}

EffectAlgebra EffectAlgebra::from_bundle(const Bundle& b, const std::string& plus_name,
                                         const std::string& comp_name) {
  return EffectAlgebra(b.lattice, b.op(plus_name), b.unary(comp_name));
}

Cell EffectAlgebra::minus(Elem y, Elem x) const {
  for (Elem z = 0; z < size(); ++z)
    if (plus_.defined(x, z) && plus_.value(x, z) == y) return z;
  return std::nullopt;
}

PartialOp lea_tnorm(const EffectAlgebra& E) {
  const int n = E.size();
  const Lattice& L = E.order();
  PartialOp op(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem xc = E.comp()(x);
      if (!L.le(xc, y)) continue;
      // x' <= y = y'' gives definedness of x' + y' via x + y defined iff x <= y'.
      op.set(x, y, E.comp()(E.plus().value(xc, E.comp()(y))));
    }
  return op;
}

Bundle lea_prl(const EffectAlgebra& E, const std::string& name) {
  const int n = E.size();
  const Lattice& L = E.order();
  PartialOp arrow(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (L.le(y, x)) arrow.set(x, y, E.plus().value(E.comp()(x), y));
  Bundle b;
  b.name = name;
  b.lattice = L;
  b.add_op("and", lea_tnorm(E));
  b.add_op("imp", std::move(arrow));
  b.claims.push_back({ClassTag::prl, {"and", "imp"}});
  return b;
}

PartialOp sasaki_arrow(const EffectAlgebra& E) {
  const int n = E.size();
  const Lattice& L = E.order();
  PartialOp op(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      op.set(x, y, E.plus().value(E.comp()(x), L.meet(x, y)));
  return op;
}

PartialOp is_implication(const EffectAlgebra& E) {
  const int n = E.size();
  const Lattice& L = E.order();
  PartialOp op(n);
  for (Elem x = 0; x < n; ++x) {
    const bool chain = L.interval_is_chain(x);
    const auto atoms = L.atoms_below(x);
    for (Elem y = 0; y < n; ++y) {
      if (L.le(x, y)) { op.set(x, y, L.top()); continue; }
      if (chain && atoms.size() == 1) {
        const Cell d = E.minus(x, L.meet(x, y));
        if (d.has_value() && *d == atoms[0]) { op.set(x, y, E.comp()(atoms[0])); continue; }
      }
      op.set(x, y, L.bottom());
    }
  }
  return op;
}

PartialOp pfi_reciprocal(const Lattice& L, const PartialOp& PI, const UnaryOp& N, bool validate) {
  if (validate) {
    if (!check_partial_fuzzy_implication(L, PI).pass())
      throw Error(Errc::InputNotPFI, "PI fails check_partial_fuzzy_implication");
    if (!check_negation(L, N).pass()) throw Error(Errc::InputNotNegation, "N fails check_negation");
  }
  const int n = L.size();
  PartialOp out(n);
  for (Elem u = 0; u < n; ++u)
    for (Elem v = 0; v < n; ++v) out.set(u, v, PI.at(N(v), N(u)));
  return out;
}

PartialOp pfi_min_combine(const Lattice& L, const PartialOp& PI, const UnaryOp& N, bool validate) {
  const PartialOp PIN = pfi_reciprocal(L, PI, N, validate);
  const int n = L.size();
  PartialOp out(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (!PI.defined(x, y) || !PIN.defined(x, y)) continue;
      out.set(x, y, L.meet(L.join(PI.value(x, y), N(x)), L.join(PIN.value(x, y), y)));
    }
  return out;
}

PartialOp pfi_vertical_splice(const Lattice& L, const std::vector<Rational>& grid,
                              const PartialOp& PI1, const PartialOp& PI2, const Rational& a) {
  const int n = L.size();
  if (static_cast<int>(grid.size()) != n)
    throw Error(Errc::BadParams, "grid values not sized to lattice");
  auto at = [&](const Rational& v) -> int {
    for (int i = 0; i < n; ++i)
      if (grid[i] == v) return i;
    return -1;
  };
  if (a <= Rational(0) || a >= Rational(1) || at(a) < 0)
    throw Error(Errc::GridNotClosed, "splice point must be an interior grid point");
  PartialOp out(n);
  const Rational one(1);
  for (int ui = 0; ui < n; ++ui) {
    const Rational u = grid[ui];
    for (int vi = 0; vi < n; ++vi) {
      const Rational v = grid[vi];
      if (u == Rational(0)) { out.set(ui, vi, at(one)); continue; }
      if (v <= a) {
        const int inner = at(v / a);
        if (inner < 0 || !PI1.defined(ui, inner)) continue;
        const int res = at(a * grid[PI1.value(ui, inner)]);
        if (res >= 0) out.set(ui, vi, res);
      } else {
        const int inner = at((v - a) / (one - a));
        if (inner < 0 || !PI2.defined(ui, inner)) continue;
        const int res = at(a + (one - a) * grid[PI2.value(ui, inner)]);
        if (res >= 0) out.set(ui, vi, res);
      }
    }
  }
  return out;
}

Bundle dualize_to_pcrl(const Bundle& zl, const std::string& oplus, const std::string& ominus) {
  CheckReport r = check_zl_prl(zl.lattice, zl.op(oplus), zl.op(ominus));
  if (!r.pass()) throw Error(Errc::NotZlPrl, "input fails check_zl_prl");
  Bundle out;
  out.name = zl.name + "/pcrl";
  out.lattice = zl.lattice;
  out.add_op("or", zl.op(oplus));
  out.add_op("coimp", zl.op(ominus));
  out.claims.push_back({ClassTag::pcrl, {"or", "coimp"}});
  if (is_total(zl.op(oplus)) && is_total(zl.op(ominus)))
    out.claims.push_back({ClassTag::corl, {"or", "coimp"}});
  return out;
}

}  // namespace plw
