#include "plw/checkers.hpp"

#include <algorithm>

namespace plw {

namespace {

// PAP1/cPAP1: isotone where both products are defined, in both arguments.
CheckItem isotone_both_defined(const Lattice& L, const PartialOp& op, const std::string& axiom) {
  const int n = L.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (!L.le(x, y)) continue;
      for (Elem z = 0; z < n; ++z) {
        if (op.defined(x, z) && op.defined(y, z) && !L.le(op.value(x, z), op.value(y, z)))
          return CheckItem::fail(axiom, {x, y, z});
        if (op.defined(z, x) && op.defined(z, y) && !L.le(op.value(z, x), op.value(z, y)))
          return CheckItem::fail(axiom, {x, y, z});
      }
    }
  return CheckItem::ok(axiom);
}

// PAP2: antitone first argument, isotone second, both-defined form.
CheckItem arrow_mixed_monotone(const Lattice& L, const PartialOp& ar, const std::string& axiom) {
  const int n = L.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (!L.le(x, y)) continue;
      for (Elem z = 0; z < n; ++z) {
        if (ar.defined(x, z) && ar.defined(y, z) && !L.le(ar.value(y, z), ar.value(x, z)))
          return CheckItem::fail(axiom, {x, y, z});
        if (ar.defined(z, x) && ar.defined(z, y) && !L.le(ar.value(z, x), ar.value(z, y)))
          return CheckItem::fail(axiom, {x, y, z});
      }
    }
  return CheckItem::ok(axiom);
}

// cPAP2: isotone first argument, antitone second, both-defined form.
CheckItem co_mixed_monotone(const Lattice& L, const PartialOp& ld, const std::string& axiom) {
  const int n = L.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (!L.le(x, y)) continue;
      for (Elem z = 0; z < n; ++z) {
        if (ld.defined(x, z) && ld.defined(y, z) && !L.le(ld.value(x, z), ld.value(y, z)))
          return CheckItem::fail(axiom, {x, y, z});
        if (ld.defined(z, y) && ld.defined(z, x) && !L.le(ld.value(z, y), ld.value(z, x)))
          return CheckItem::fail(axiom, {x, y, z});
      }
    }
  return CheckItem::ok(axiom);
}

CheckItem pap3(const Lattice& L, const PartialOp& ot, const PartialOp& ar) {
  const int n = L.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (ot.defined(x, y) && ar.defined(x, z) &&
            L.le(ot.value(x, y), z) != L.le(y, ar.value(x, z)))
          return CheckItem::fail("PAP3", {x, y, z});
  return CheckItem::ok("PAP3");
}

CheckItem cpap3(const Lattice& L, const PartialOp& od, const PartialOp& ld) {
  const int n = L.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (od.defined(x, y) && ld.defined(z, y) &&
            L.le(z, od.value(x, y)) != L.le(ld.value(z, y), x))
          return CheckItem::fail("cPAP3", {x, y, z});
  return CheckItem::ok("cPAP3");
}

void require_same_size(const Lattice& L, const PartialOp& op) {
  if (op.size() != L.size()) throw Error(Errc::RaggedTable, "op not sized to lattice");
}

}  // namespace

CheckReport check_partial_tnorm(const Lattice& L, const PartialOp& op) {
  require_same_size(L, op);
  CheckReport r{"ptnorm", {}};
  r.add(unit_law(L, op, L.top(), /*left_unit=*/false, "unit"));
  r.add(commutative_partial(L, op, "comm"));
  r.add(associative_directional(L, op, "assoc"));
  r.add(monotone_partial(L, op, "mono"));
  return r;
}

CheckReport check_partial_tconorm(const Lattice& L, const PartialOp& op) {
  require_same_size(L, op);
  CheckReport r{"ptconorm", {}};
  r.add(unit_law(L, op, L.bottom(), /*left_unit=*/true, "unit"));
  r.add(commutative_partial(L, op, "comm"));
  r.add(associative_directional(L, op, "assoc"));
  r.add(monotone_partial(L, op, "mono"));
  return r;
}

CheckReport check_tnorm(const Lattice& L, const PartialOp& op) {
  require_same_size(L, op);
  CheckReport r = check_partial_tnorm(L, op);
  r.class_tag = "tnorm";
  CheckItem tot = CheckItem::ok("total");
  for (Elem x = 0; x < L.size() && tot.pass; ++x)
    for (Elem y = 0; y < L.size(); ++y)
      if (!op.defined(x, y)) { tot = CheckItem::fail("total", {x, y}); break; }
  r.items.insert(r.items.begin(), tot);
  return r;
}

CheckReport check_tconorm(const Lattice& L, const PartialOp& op) {
  require_same_size(L, op);
  CheckReport r = check_partial_tconorm(L, op);
  r.class_tag = "tconorm";
  CheckItem tot = CheckItem::ok("total");
  for (Elem x = 0; x < L.size() && tot.pass; ++x)
    for (Elem y = 0; y < L.size(); ++y)
      if (!op.defined(x, y)) { tot = CheckItem::fail("total", {x, y}); break; }
  r.items.insert(r.items.begin(), tot);
  return r;
}

CheckReport check_negation(const Lattice& L, const UnaryOp& N) {
  if (N.size() != L.size()) throw Error(Errc::RaggedTable, "unary op not sized to lattice");
  CheckReport r{"negation", {}};
  CheckItem bound = CheckItem::ok("boundary");
  if (N(L.bottom()) != L.top()) bound = CheckItem::fail("boundary", {L.bottom()});
  else if (N(L.top()) != L.bottom()) bound = CheckItem::fail("boundary", {L.top()});
  r.add(bound);
  CheckItem anti = CheckItem::ok("antitone");
  for (Elem x = 0; x < L.size() && anti.pass; ++x)
    for (Elem y = 0; y < L.size(); ++y)
      if (L.le(x, y) && !L.le(N(y), N(x))) { anti = CheckItem::fail("antitone", {x, y}); break; }
  r.add(anti);
  return r;
}

CheckReport check_fuzzy_implication(const Lattice& L, const PartialOp& I) {
  require_same_size(L, I);
  if (!is_total(I)) throw Error(Errc::NotTotal, "fuzzy implication must be a total operation");
  CheckReport r{"fi", {}};
  CheckItem b = CheckItem::ok("boundary");
  if (I.value(L.bottom(), L.bottom()) != L.top()) b = CheckItem::fail("boundary", {L.bottom(), L.bottom()});
  else if (I.value(L.top(), L.top()) != L.top()) b = CheckItem::fail("boundary", {L.top(), L.top()});
  else if (I.value(L.top(), L.bottom()) != L.bottom()) b = CheckItem::fail("boundary", {L.top(), L.bottom()});
  r.add(b);
  const int n = L.size();
  CheckItem anti = CheckItem::ok("antitone-1st");
  for (Elem x1 = 0; x1 < n && anti.pass; ++x1)
    for (Elem x2 = 0; x2 < n && anti.pass; ++x2) {
      if (!L.le(x1, x2)) continue;
      for (Elem y = 0; y < n; ++y)
        if (!L.le(I.value(x2, y), I.value(x1, y))) {
          anti = CheckItem::fail("antitone-1st", {x1, x2, y});
          break;
        }
    }
  r.add(anti);
  CheckItem iso = CheckItem::ok("isotone-2nd");
  for (Elem y1 = 0; y1 < n && iso.pass; ++y1)
    for (Elem y2 = 0; y2 < n && iso.pass; ++y2) {
      if (!L.le(y1, y2)) continue;
      for (Elem x = 0; x < n; ++x)
        if (!L.le(I.value(x, y1), I.value(x, y2))) {
          iso = CheckItem::fail("isotone-2nd", {x, y1, y2});
          break;
        }
    }
  r.add(iso);
  return r;
}

CheckReport check_partial_fuzzy_implication(const Lattice& L, const PartialOp& PI) {
  require_same_size(L, PI);
  const Elem b = L.bottom(), t = L.top();
  if (!PI.defined(b, b) || !PI.defined(t, t) || !PI.defined(t, b))
    throw Error(Errc::BoundaryUndefined, "PI(0,0), PI(1,1), PI(1,0) must be defined");
  CheckReport r{"pfi", {}};
  CheckItem pi3 = CheckItem::ok("PI3");
  if (PI.value(b, b) != t) pi3 = CheckItem::fail("PI3", {b, b});
  else if (PI.value(t, t) != t) pi3 = CheckItem::fail("PI3", {t, t});
  else if (PI.value(t, b) != b) pi3 = CheckItem::fail("PI3", {t, b});
  const int n = L.size();
  CheckItem pi1 = CheckItem::ok("PI1");
  for (Elem x1 = 0; x1 < n && pi1.pass; ++x1)
    for (Elem x2 = 0; x2 < n && pi1.pass; ++x2) {
      if (!L.le(x1, x2)) continue;
      for (Elem y = 0; y < n; ++y)
        if (PI.defined(x1, y) && PI.defined(x2, y) && !L.le(PI.value(x2, y), PI.value(x1, y))) {
          pi1 = CheckItem::fail("PI1", {x1, x2, y});
          break;
        }
    }
  CheckItem pi2 = CheckItem::ok("PI2");
  for (Elem y1 = 0; y1 < n && pi2.pass; ++y1)
    for (Elem y2 = 0; y2 < n && pi2.pass; ++y2) {
      if (!L.le(y1, y2)) continue;
      for (Elem x = 0; x < n; ++x)
        if (PI.defined(x, y1) && PI.defined(x, y2) && !L.le(PI.value(x, y1), PI.value(x, y2))) {
          pi2 = CheckItem::fail("PI2", {x, y1, y2});
          break;
        }
    }
  r.add(pi1);
  r.add(pi2);
  r.add(pi3);
  return r;
}

CheckReport check_pap(const Lattice& L, const PartialOp& ot, const PartialOp& ar) {
  require_same_size(L, ot);
  require_same_size(L, ar);
  CheckReport r{"pap", {}};
  r.add(isotone_both_defined(L, ot, "PAP1"));
  r.add(arrow_mixed_monotone(L, ar, "PAP2"));
  r.add(pap3(L, ot, ar));
  return r;
}

CheckReport check_prl(const Lattice& L, const PartialOp& ot, const PartialOp& ar) {
  require_same_size(L, ot);
  require_same_size(L, ar);
  CheckReport r{"prl", {}};
  {
    CheckItem it = commutative_partial(L, ot, "PRL1");
    r.add(it);
  }
  r.add(associative_directional(L, ot, "PRL2"));
  r.add(unit_law(L, ot, L.top(), /*left_unit=*/false, "PRL3"));
  r.add(isotone_both_defined(L, ot, "PAP1"));
  r.add(arrow_mixed_monotone(L, ar, "PAP2"));
  r.add(pap3(L, ot, ar));
  return r;
}

CheckReport check_sprl(const Lattice& L, const PartialOp& ot, const PartialOp& ar) {
  require_same_size(L, ot);
  require_same_size(L, ar);
  CheckReport r{"sprl", {}};
  r.add(commutative_partial(L, ot, "sPRL1"));
  r.add(associative_directional(L, ot, "sPRL2"));
  r.add(unit_law(L, ot, L.top(), /*left_unit=*/true, "sPRL3"));
  const int n = L.size();
  // sPAP1: definedness propagates upward through arguments.
  CheckItem s1 = CheckItem::ok("sPAP1");
  for (Elem x = 0; x < n && s1.pass; ++x)
    for (Elem y = 0; y < n && s1.pass; ++y) {
      if (!L.le(x, y)) continue;
      for (Elem z = 0; z < n; ++z) {
        if (ot.defined(x, z) && (!ot.defined(y, z) || !L.le(ot.value(x, z), ot.value(y, z)))) {
          s1 = CheckItem::fail("sPAP1", {x, y, z});
          break;
        }
        if (ot.defined(z, x) && (!ot.defined(z, y) || !L.le(ot.value(z, x), ot.value(z, y)))) {
          s1 = CheckItem::fail("sPAP1", {x, y, z});
          break;
        }
      }
    }
  r.add(s1);
  CheckItem s2 = CheckItem::ok("sPAP2");
  for (Elem x = 0; x < n && s2.pass; ++x)
    for (Elem y = 0; y < n && s2.pass; ++y) {
      if (!L.le(x, y)) continue;
      for (Elem z = 0; z < n; ++z) {
        if (ar.defined(x, z) && (!ar.defined(y, z) || !L.le(ar.value(y, z), ar.value(x, z)))) {
          s2 = CheckItem::fail("sPAP2", {x, y, z});
          break;
        }
        if (ar.defined(z, y) && (!ar.defined(z, x) || !L.le(ar.value(z, x), ar.value(z, y)))) {
          s2 = CheckItem::fail("sPAP2", {x, y, z});
          break;
        }
      }
    }
  r.add(s2);
  CheckItem s3 = CheckItem::ok("sPAP3");
  for (Elem x = 0; x < n && s3.pass; ++x)
    for (Elem y = 0; y < n && s3.pass; ++y)
      for (Elem z = 0; z < n; ++z) {
        const bool lhs = ot.defined(x, y) && L.le(ot.value(x, y), z);
        const bool rhs = ar.defined(x, z) && L.le(y, ar.value(x, z));
        if (lhs != rhs) {
          s3 = CheckItem::fail("sPAP3", {x, y, z});
          break;
        }
      }
  r.add(s3);
  return r;
}

CheckReport check_wprl(const Lattice& L, const PartialOp& ot, const PartialOp& ar) {
  CheckReport r = check_prl(L, ot, ar);
  r.class_tag = "wprl";
  const int n = L.size();
  CheckItem w1 = CheckItem::ok("W1");
  for (Elem x = 0; x < n; ++x) {
    if (!ar.defined(x, x)) { w1 = CheckItem::fail("W1", {x, x}); break; }
    if (!ar.defined(x, L.top())) { w1 = CheckItem::fail("W1", {x, L.top()}); break; }
  }
  r.add(w1);
  CheckItem w2 = CheckItem::ok("W2");
  for (Elem x = 0; x < n && w2.pass; ++x)
    for (Elem y = 0; y < n; ++y)
      if (ar.defined(x, y) && !ot.defined(x, ar.value(x, y))) {
        w2 = CheckItem::fail("W2", {x, y});
        break;
      }
  r.add(w2);
  return r;
}

CheckReport check_residuated_lattice(const Lattice& L, const PartialOp& ot, const PartialOp& ar) {
  require_same_size(L, ot);
  require_same_size(L, ar);
  CheckReport r{"rl", {}};
  CheckItem tot = CheckItem::ok("total");
  for (Elem x = 0; x < L.size() && tot.pass; ++x)
    for (Elem y = 0; y < L.size(); ++y)
      if (!ot.defined(x, y) || !ar.defined(x, y)) { tot = CheckItem::fail("total", {x, y}); break; }
  r.add(tot);
  if (!tot.pass) return r;
  r.add(commutative_partial(L, ot, "comm"));
  r.add(associative_total(L, ot, "assoc"));
  r.add(unit_law(L, ot, L.top(), /*left_unit=*/false, "unit"));
  CheckItem adj = CheckItem::ok("adjunction");
  const int n = L.size();
  for (Elem x = 0; x < n && adj.pass; ++x)
    for (Elem y = 0; y < n && adj.pass; ++y)
      for (Elem z = 0; z < n; ++z)
        if (L.le(ot.value(x, y), z) != L.le(y, ar.value(x, z))) {
          adj = CheckItem::fail("adjunction", {x, y, z});
          break;
        }
  r.add(adj);
  return r;
}

CheckReport check_coadjoint(const Lattice& L, const PartialOp& op, const PartialOp& om) {
  require_same_size(L, op);
  require_same_size(L, om);
  if (!is_total(op) || !is_total(om))
    throw Error(Errc::NotTotal, "co-adjoint pair requires two binary (total) operations");
  CheckReport r{"coap", {}};
  r.add(isotone_both_defined(L, op, "cAP1"));
  r.add(co_mixed_monotone(L, om, "cAP2"));
  CheckItem a3 = CheckItem::ok("cAP3");
  const int n = L.size();
  for (Elem x = 0; x < n && a3.pass; ++x)
    for (Elem y = 0; y < n && a3.pass; ++y)
      for (Elem z = 0; z < n; ++z)
        if (L.le(z, op.value(x, y)) != L.le(om.value(z, y), x)) {
          a3 = CheckItem::fail("cAP3", {x, y, z});
          break;
        }
  r.add(a3);
  return r;
}

CheckReport check_corl(const Lattice& L, const PartialOp& op, const PartialOp& om) {
  require_same_size(L, op);
  require_same_size(L, om);
  if (!is_total(op) || !is_total(om))
    throw Error(Errc::NotTotal, "co-residuated lattice requires total operations");
  CheckReport r{"corl", {}};
  r.add(commutative_partial(L, op, "cRL1-comm"));
  r.add(associative_total(L, op, "cRL1-assoc"));
  r.add(unit_law(L, op, L.bottom(), /*left_unit=*/false, "cRL2"));
  CheckReport ap = check_coadjoint(L, op, om);
  for (auto& it : ap.items) r.add(std::move(it));
  return r;
}

CheckReport check_pcrl(const Lattice& L, const PartialOp& od, const PartialOp& ld) {
  require_same_size(L, od);
  require_same_size(L, ld);
  CheckReport r{"pcrl", {}};
  r.add(commutative_partial(L, od, "cPRL1"));
  r.add(associative_directional(L, od, "cPRL2"));
  r.add(unit_law(L, od, L.bottom(), /*left_unit=*/false, "cPRL3"));
  r.add(isotone_both_defined(L, od, "cPAP1"));
  r.add(co_mixed_monotone(L, ld, "cPAP2"));
  r.add(cpap3(L, od, ld));
  return r;
}

CheckReport check_zl_prl(const Lattice& L, const PartialOp& op, const PartialOp& om) {
  require_same_size(L, op);
  require_same_size(L, om);
  CheckReport r{"zlprl", {}};
  r.add(commutative_partial(L, op, "monoid-comm"));
  r.add(associative_directional(L, op, "monoid-assoc"));
  r.add(unit_law(L, op, L.bottom(), /*left_unit=*/false, "monoid-unit"));
  r.add(isotone_both_defined(L, op, "cPAP1"));
  r.add(co_mixed_monotone(L, om, "cPAP2"));
  r.add(cpap3(L, op, om));
  return r;
}

CheckReport check_effect_algebra(const Lattice& carrier, const PartialOp& plus, const UnaryOp& comp,
                                 std::optional<Lattice>* derived) {
  require_same_size(carrier, plus);
  if (comp.size() != carrier.size())
    throw Error(Errc::RaggedTable, "complement not sized to carrier");
  const int n = carrier.size();
  CheckReport r{"ea", {}};
  r.add(commutative_partial(carrier, plus, "E1"));
  r.add(associative_iff(carrier, plus, "E2"));

  // The derived order: x <= y iff exists z with x + z = y.
  std::vector<std::uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem z = 0; z < n; ++z)
      if (plus.defined(x, z)) leq[x * n + plus.value(x, z)] = 1;
  for (Elem x = 0; x < n; ++x) leq[x * n + x] = 1;

  // locate the unit 1 as the maximum of the derived order (if unique)
  Elem one = -1;
  {
    // transitive closure of the derived relation first
    auto cl = leq;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (cl[i * n + k])
          for (int j = 0; j < n; ++j)
            if (cl[k * n + j]) cl[i * n + j] = 1;
    for (Elem x = 0; x < n; ++x) {
      bool top = true;
      for (Elem y = 0; y < n; ++y)
        if (!cl[y * n + x]) { top = false; break; }
      if (top) { one = x; break; }
    }
    leq = cl;
  }

  CheckItem e3 = CheckItem::ok("E3");
  if (one < 0) {
    e3 = CheckItem::fail("E3", {});
  } else {
    for (Elem x = 0; x < n; ++x) {
      int count = 0;
      Elem last = -1;
      for (Elem y = 0; y < n; ++y)
        if (plus.defined(x, y) && plus.value(x, y) == one) { ++count; last = y; }
      if (count != 1 || last != comp(x)) { e3 = CheckItem::fail("E3", {x}); break; }
    }
  }
  r.add(e3);

  CheckItem e4 = CheckItem::ok("E4");
  if (one >= 0) {
    Elem zero = -1;
    for (Elem x = 0; x < n && zero < 0; ++x) {
      bool bot = true;
      for (Elem y = 0; y < n; ++y)
        if (!leq[x * n + y]) { bot = false; break; }
      if (bot) zero = x;
    }
    for (Elem x = 0; x < n; ++x)
      if (plus.defined(x, one) && x != zero) { e4 = CheckItem::fail("E4", {x}); break; }
  }
  r.add(e4);

  // LEA test: derived order antisymmetric and a bounded lattice.
  CheckItem lea = CheckItem::ok("lattice-order");
  try {
    Lattice D = Lattice::from_leq(carrier.labels(), leq);
    if (derived) *derived = D;
  } catch (const Error&) {
    lea = CheckItem::fail("lattice-order", {});
    if (derived) derived->reset();
  }
  r.add(lea);
  return r;
}

CheckReport check_quasiresiduated(const Lattice& L, const PartialOp& od, const PartialOp& ar,
                                  const UnaryOp& comp) {
  require_same_size(L, od);
  require_same_size(L, ar);
  if (comp.size() != L.size()) throw Error(Errc::RaggedTable, "complement not sized to lattice");
  if (!is_total(ar)) throw Error(Errc::ArrowNotTotal, "quasiresiduated arrow must be a full operation");
  const int n = L.size();
  CheckReport r{"quasires", {}};
  r.add(commutative_partial(L, od, "monoid-comm"));
  r.add(associative_iff(L, od, "monoid-assoc"));
  r.add(unit_law(L, od, L.top(), /*left_unit=*/false, "monoid-unit"));
  CheckItem di = CheckItem::ok("defined-iff");
  for (Elem x = 0; x < n && di.pass; ++x)
    for (Elem y = 0; y < n; ++y)
      if (od.defined(x, y) != L.le(comp(x), y)) { di = CheckItem::fail("defined-iff", {x, y}); break; }
  r.add(di);
  CheckItem inv = CheckItem::ok("involution");
  for (Elem x = 0; x < n; ++x)
    if (comp(comp(x)) != x) { inv = CheckItem::fail("involution", {x}); break; }
  r.add(inv);
  CheckItem anti = CheckItem::ok("antitone");
  for (Elem x = 0; x < n && anti.pass; ++x)
    for (Elem y = 0; y < n; ++y)
      if (L.le(x, y) && !L.le(comp(y), comp(x))) { anti = CheckItem::fail("antitone", {x, y}); break; }
  r.add(anti);
  // (x v y') . y <= y ^ z  iff  x v y' <= y -> z
  CheckItem res = CheckItem::ok("residuation");
  for (Elem x = 0; x < n && res.pass; ++x)
    for (Elem y = 0; y < n && res.pass; ++y)
      for (Elem z = 0; z < n; ++z) {
        const Elem u = L.join(x, comp(y));
        const bool lhs = od.defined(u, y) && L.le(od.value(u, y), L.meet(y, z));
        const bool rhs = L.le(u, ar.value(y, z));
        if (lhs != rhs) { res = CheckItem::fail("residuation", {x, y, z}); break; }
      }
  r.add(res);
  return r;
}

CheckReport check_claim(const Bundle& b, const Claim& c) {
  const auto need = static_cast<size_t>(class_tag_arity(c.tag));
  if (c.ops.size() != need)
    throw Error(Errc::BadArity, std::string(class_tag_name(c.tag)) + " claim wants " +
                                    std::to_string(need) + " operation name(s)");
  const Lattice& L = b.lattice;
  switch (c.tag) {
    case ClassTag::ptnorm: return check_partial_tnorm(L, b.op(c.ops[0]));
    case ClassTag::ptconorm: return check_partial_tconorm(L, b.op(c.ops[0]));
    case ClassTag::tnorm: return check_tnorm(L, b.op(c.ops[0]));
    case ClassTag::tconorm: return check_tconorm(L, b.op(c.ops[0]));
    case ClassTag::negation: return check_negation(L, b.unary(c.ops[0]));
    case ClassTag::fi: return check_fuzzy_implication(L, b.op(c.ops[0]));
    case ClassTag::pfi: return check_partial_fuzzy_implication(L, b.op(c.ops[0]));
    case ClassTag::ea: return check_effect_algebra(L, b.op(c.ops[0]), b.unary(c.ops[1]));
    case ClassTag::lea: {
      CheckReport r = check_effect_algebra(L, b.op(c.ops[0]), b.unary(c.ops[1]));
      r.class_tag = "lea";
      return r;
    }
    case ClassTag::quasires:
      return check_quasiresiduated(L, b.op(c.ops[0]), b.op(c.ops[1]), b.unary(c.ops[2]));
    case ClassTag::pap: return check_pap(L, b.op(c.ops[0]), b.op(c.ops[1]));
    case ClassTag::prl: return check_prl(L, b.op(c.ops[0]), b.op(c.ops[1]));
    case ClassTag::sprl: return check_sprl(L, b.op(c.ops[0]), b.op(c.ops[1]));
    case ClassTag::wprl: return check_wprl(L, b.op(c.ops[0]), b.op(c.ops[1]));
    case ClassTag::coap: return check_coadjoint(L, b.op(c.ops[0]), b.op(c.ops[1]));
    case ClassTag::corl: return check_corl(L, b.op(c.ops[0]), b.op(c.ops[1]));
    case ClassTag::pcrl: return check_pcrl(L, b.op(c.ops[0]), b.op(c.ops[1]));
    case ClassTag::zlprl: return check_zl_prl(L, b.op(c.ops[0]), b.op(c.ops[1]));
    case ClassTag::rl: return check_residuated_lattice(L, b.op(c.ops[0]), b.op(c.ops[1]));
  }
  throw Error(Errc::UnknownClassTag, "unhandled tag");
}

bool replay_witness(const Bundle& b, const Claim& c, const Witness& w) {
  // Recheck the cited axiom on the restriction of the scan to the witness
  // tuple: rerun the single-axiom predicate at exactly those elements.
  const Lattice& L = b.lattice;
  const auto& ax = w.axiom;
  auto opn = [&](size_t i) -> const PartialOp& { return b.op(c.ops[i]); };
  const auto& e = w.elems;
  auto def = [](const PartialOp& t, Elem x, Elem y) { return t.defined(x, y); };

  if (ax == "comm" || ax == "PRL1" || ax == "sPRL1" || ax == "cPRL1" || ax == "E1" ||
      ax == "monoid-comm" || ax == "cRL1-comm") {
    const auto& t = opn(0);
    Elem x = e[0], y = e[1];
    return def(t, x, y) && (!def(t, y, x) || t.value(y, x) != t.value(x, y));
  }
  if (ax == "assoc" || ax == "PRL2" || ax == "sPRL2" || ax == "cPRL2" || ax == "monoid-assoc" ||
      ax == "cRL1-assoc") {
    const auto& t = opn(0);
    Elem x = e[0], y = e[1], z = e[2];
    if (ax == "monoid-assoc" && c.tag == ClassTag::quasires) {
      const bool lhs = def(t, x, y) && def(t, t.value(x, y), z);
      const bool rhs = def(t, y, z) && def(t, x, t.value(y, z));
      if (lhs != rhs) return true;
      return lhs && t.value(t.value(x, y), z) != t.value(x, t.value(y, z));
    }
    if (!def(t, y, z)) return false;
    const Elem yz = t.value(y, z);
    if (!def(t, x, yz)) return false;
    return !def(t, x, y) || !def(t, t.value(x, y), z) ||
           t.value(t.value(x, y), z) != t.value(x, yz);
  }
  if (ax == "mono") {
    const auto& t = opn(0);
    Elem x = e[0], y = e[1], h = e[2], k = e[3];
    return L.le(x, y) && L.le(h, k) && def(t, x, h) && def(t, y, k) &&
           !L.le(t.value(x, h), t.value(y, k));
  }
  if (ax == "unit" || ax == "PRL3" || ax == "sPRL3" || ax == "cPRL3" || ax == "cRL2" ||
      ax == "monoid-unit") {
    const auto& t = opn(0);
    Elem x = e[0];
    const bool left = (ax == "sPRL3" || (ax == "unit" && (c.tag == ClassTag::ptconorm ||
                                                          c.tag == ClassTag::tconorm)));
    const Elem u = (c.tag == ClassTag::ptconorm || c.tag == ClassTag::tconorm ||
                    c.tag == ClassTag::pcrl || c.tag == ClassTag::zlprl || c.tag == ClassTag::corl)
                       ? L.bottom()
                       : L.top();
    const Cell v = left ? t.at(u, x) : t.at(x, u);
    return !v.has_value() || *v != x;
  }
  if (ax == "PAP3") {
    const auto &ot = opn(0), &ar = opn(1);
    Elem x = e[0], y = e[1], z = e[2];
    return def(ot, x, y) && def(ar, x, z) &&
           L.le(ot.value(x, y), z) != L.le(y, ar.value(x, z));
  }
  if (ax == "cPAP3" || ax == "cAP3") {
    const auto &od = opn(0), &ld = opn(1);
    Elem x = e[0], y = e[1], z = e[2];
    return def(od, x, y) && def(ld, z, y) &&
           L.le(z, od.value(x, y)) != L.le(ld.value(z, y), x);
  }
  if (ax == "PAP1" || ax == "cPAP1" || ax == "cAP1" || ax == "sPAP1") {
    const auto& t = opn(0);
    Elem x = e[0], y = e[1], z = e[2];
    if (!L.le(x, y)) return false;
    if (ax == "sPAP1") {
      if (def(t, x, z) && (!def(t, y, z) || !L.le(t.value(x, z), t.value(y, z)))) return true;
      return def(t, z, x) && (!def(t, z, y) || !L.le(t.value(z, x), t.value(z, y)));
    }
    if (def(t, x, z) && def(t, y, z) && !L.le(t.value(x, z), t.value(y, z))) return true;
    return def(t, z, x) && def(t, z, y) && !L.le(t.value(z, x), t.value(z, y));
  }
  if (ax == "PAP2" || ax == "cPAP2" || ax == "cAP2" || ax == "sPAP2") {
    const auto& t = opn(1);
    Elem x = e[0], y = e[1], z = e[2];
    if (!L.le(x, y)) return false;
    if (ax == "cPAP2" || ax == "cAP2") {
      if (def(t, x, z) && def(t, y, z) && !L.le(t.value(x, z), t.value(y, z))) return true;
      return def(t, z, y) && def(t, z, x) && !L.le(t.value(z, y), t.value(z, x));
    }
    if (ax == "sPAP2") {
      if (def(t, x, z) && (!def(t, y, z) || !L.le(t.value(y, z), t.value(x, z)))) return true;
      return def(t, z, y) && (!def(t, z, x) || !L.le(t.value(z, x), t.value(z, y)));
    }
    if (def(t, x, z) && def(t, y, z) && !L.le(t.value(y, z), t.value(x, z))) return true;
    return def(t, z, x) && def(t, z, y) && !L.le(t.value(z, x), t.value(z, y));
  }
  if (ax == "sPAP3") {
    const auto &ot = opn(0), &ar = opn(1);
    Elem x = e[0], y = e[1], z = e[2];
    const bool lhs = def(ot, x, y) && L.le(ot.value(x, y), z);
    const bool rhs = def(ar, x, z) && L.le(y, ar.value(x, z));
    return lhs != rhs;
  }
  if (ax == "W1") {
    const auto& ar = opn(1);
    return !ar.defined(e[0], e[1]);
  }
  if (ax == "W2") {
    const auto &ot = opn(0), &ar = opn(1);
    return ar.defined(e[0], e[1]) && !ot.defined(e[0], ar.value(e[0], e[1]));
  }
  // Remaining axioms (boundary, PI1/PI2/PI3, E-axioms, quasires specifics):
  // rerun the full checker and see whether the same witness is reported.
  CheckReport r = check_claim(b, c);
  for (const auto& it : r.items)
    if (!it.pass)
      for (const auto& ww : it.witnesses)
        if (ww.axiom == ax && ww.elems == e) return true;
  return false;
}

}  // namespace plw
