#include "plw/enumerate.hpp"

#include <algorithm>

namespace plw {

namespace {

// Free cells for a commutative table with forced unit row/column: the upper
// triangle over non-unit elements, row-major.
std::vector<std::pair<Elem, Elem>> free_cells(int n, Elem unit) {
  std::vector<std::pair<Elem, Elem>> cells;
  for (Elem x = 0; x < n; ++x) {
    if (x == unit) continue;
    for (Elem y = x; y < n; ++y) {
      if (y == unit) continue;
      cells.emplace_back(x, y);
    }
  }
  return cells;
}

// Local monotonicity prune against already assigned cells.
bool mono_ok(const Lattice& L, const PartialOp& op, Elem x, Elem y) {
  const int n = L.size();
  const Elem v = op.value(x, y);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!op.defined(a, b)) continue;
      const Elem w = op.value(a, b);
      if (L.le(a, x) && L.le(b, y) && !L.le(w, v)) return false;
      if (L.le(x, a) && L.le(y, b) && !L.le(v, w)) return false;
    }
  return true;
}

struct DfsEnv {
  const Lattice& L;
  Elem unit;
  bool conorm;  // dual monotone direction handled by mono_ok uniformly
  const std::vector<std::pair<Elem, Elem>>& cells;
  std::function<void(const PartialOp&)> emit;
};

void dfs(DfsEnv& env, PartialOp& op, size_t i) {
  if (i == env.cells.size()) {
    env.emit(op);
    return;
  }
  const auto [x, y] = env.cells[i];
  // Undefined first, then element values in index order.
  dfs(env, op, i + 1);
  for (Elem v = 0; v < env.L.size(); ++v) {
    op.set(x, y, v);
    op.set(y, x, v);
    if (mono_ok(env.L, op, x, y)) dfs(env, op, i + 1);
    op.set(x, y, std::nullopt);
    op.set(y, x, std::nullopt);
  }
}

PartialOp permuted(const PartialOp& op, const std::vector<Elem>& perm) {
  const int n = op.size();
  PartialOp out(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (op.defined(x, y)) out.set(perm[x], perm[y], perm[op.value(x, y)]);
  return out;
}

bool cells_less(const PartialOp& a, const PartialOp& b) {
  // Undefined < 0 < 1 < ... cellwise, row-major.
  const auto key = [](const Cell& c) { return c.has_value() ? *c + 1 : 0; };
  for (size_t i = 0; i < a.cells().size(); ++i) {
    if (key(a.cells()[i]) != key(b.cells()[i])) return key(a.cells()[i]) < key(b.cells()[i]);
  }
  return false;
}

// Derives the arrow a special partial adjoint pair forces from its product:
// x->z is defined iff some x*y <= z, and then equals the maximum such y with
// the whole down-set qualifying. Returns nullopt when no arrow can satisfy
// sPAP3 for this product.
std::optional<PartialOp> forced_sprl_arrow(const Lattice& L, const PartialOp& ot) {
  const int n = L.size();
  PartialOp ar(n);
  std::vector<Elem> S;
  for (Elem x = 0; x < n; ++x)
    for (Elem z = 0; z < n; ++z) {
      S.clear();
      for (Elem y = 0; y < n; ++y)
        if (ot.defined(x, y) && L.le(ot.value(x, y), z)) S.push_back(y);
      if (S.empty()) continue;
      Elem mx = -1;
      for (Elem c : S) {
        bool best = true;
        for (Elem d : S)
          if (!L.le(d, c)) { best = false; break; }
        if (best) { mx = c; break; }
      }
      if (mx < 0) return std::nullopt;
      // S must be exactly the down-set of the maximum
      int down = 0;
      for (Elem y = 0; y < n; ++y)
        if (L.le(y, mx)) ++down;
      if (down != static_cast<int>(S.size())) return std::nullopt;
      ar.set(x, z, mx);
    }
  return ar;
}

}  // namespace

EnumerationResult enumerate_class(const EnumerationTask& task) {
  const Lattice& L = task.lattice;
  const int n = L.size();
  if (task.cap < 1) throw Error(Errc::BadParams, "cap must be >= 1");
  const bool conorm = task.target == ClassTag::ptconorm || task.target == ClassTag::tconorm;
  const bool total_only = task.target == ClassTag::tnorm || task.target == ClassTag::tconorm;
  const bool sprl = task.target == ClassTag::sprl;
  if (!sprl && !conorm && task.target != ClassTag::ptnorm && !total_only)
    throw Error(Errc::BadParams, std::string("enumeration not supported for class ") +
                                     class_tag_name(task.target));

  const Elem unit = conorm ? L.bottom() : L.top();
  auto cells = free_cells(n, unit);

  const auto autos = task.symmetry_reduction ? L.automorphisms()
                                             : std::vector<std::vector<Elem>>{};

  EnumerationResult res;
  auto validate_and_emit = [&](const PartialOp& op) {
    CheckReport r;
    PartialOp arrow;
    if (sprl) {
      auto forced = forced_sprl_arrow(L, op);
      if (!forced) return;
      arrow = *forced;
      r = check_sprl(L, op, arrow);
    } else if (task.target == ClassTag::ptnorm) {
      r = check_partial_tnorm(L, op);
    } else if (task.target == ClassTag::ptconorm) {
      r = check_partial_tconorm(L, op);
    } else if (task.target == ClassTag::tnorm) {
      r = check_tnorm(L, op);
    } else {
      r = check_tconorm(L, op);
    }
    if (!r.pass()) return;

    std::uint64_t orbit = 1;
    if (task.symmetry_reduction) {
      // keep only the orbit minimum; count the orbit size
      std::vector<PartialOp> orb;
      for (const auto& perm : autos) {
        PartialOp p = permuted(op, perm);
        if (cells_less(p, op)) return;  // not canonical
        if (std::find(orb.begin(), orb.end(), p) == orb.end()) orb.push_back(p);
      }
      orbit = orb.size();
    }
    res.count += orbit;
    if (res.bundles.size() < task.cap) {
      Bundle b;
      b.name = std::string(class_tag_name(task.target)) + "#" +
               std::to_string(res.bundles.size());
      b.lattice = L;
      b.add_op("and", op);
      if (sprl) {
        b.add_op("imp", arrow);
        b.claims.push_back({ClassTag::sprl, {"and", "imp"}});
      } else {
        b.claims.push_back({task.target, {"and"}});
      }
      res.bundles.push_back(std::move(b));
    } else {
      res.capped = true;
    }
  };

  PartialOp op(n);
  for (Elem x = 0; x < n; ++x) {
    if (conorm) {
      op.set(unit, x, x);
      op.set(x, unit, x);
    } else {
      op.set(x, unit, x);
      op.set(unit, x, x);
    }
  }
  if (total_only) {
    // enumerate only fully defined tables: same DFS but skip the Undefined branch
    std::function<void(size_t)> tdfs = [&](size_t i) {
      if (i == cells.size()) { validate_and_emit(op); return; }
      const auto [x, y] = cells[i];
      for (Elem v = 0; v < n; ++v) {
        op.set(x, y, v);
        op.set(y, x, v);
        if (mono_ok(L, op, x, y)) tdfs(i + 1);
        op.set(x, y, std::nullopt);
        op.set(y, x, std::nullopt);
      }
    };
    tdfs(0);
  } else {
    DfsEnv env{L, unit, conorm, cells, validate_and_emit};
    dfs(env, op, 0);
  }
  return res;
}

std::vector<Lattice> infer_orders(const std::vector<std::string>& labels,
                                  const std::vector<std::pair<std::string, PartialOp>>& ops,
                                  const std::vector<std::pair<std::string, UnaryOp>>& unaries,
                                  const std::vector<Claim>& claims,
                                  const InferOptions& options) {
  const int n = static_cast<int>(labels.size());
  if (n > options.max_size)
    throw Error(Errc::BadParams, "order inference bounded at " + std::to_string(options.max_size) +
                                     " elements");

  auto passes = [&](const Lattice& L) {
    Bundle b;
    b.name = "candidate";
    b.lattice = L;
    for (const auto& [nm, t] : ops) b.ops.emplace_back(nm, t);
    for (const auto& [nm, t] : unaries) b.unaries.emplace_back(nm, t);
    for (const Claim& c : claims) {
      try {
        if (!check_claim(b, c).pass()) return false;
      } catch (const Error&) {
        return false;
      }
    }
    return true;
  };

  if (options.restrict_to) {
    std::vector<Lattice> out;
    if (passes(*options.restrict_to)) out.push_back(*options.restrict_to);
    if (out.empty()) throw Error(Errc::NoConsistentOrder, "the supplied order fails the claims");
    return out;
  }

  // Derive bottom/top hints from claimed unit behaviour: a column (x,u)=x for
  // all x marks u as the unit of a top-unital class, dually for bottom-unital.
  auto unit_of = [&](const PartialOp& t, bool column) -> Elem {
    for (Elem u = 0; u < n; ++u) {
      bool ok = true;
      for (Elem x = 0; x < n; ++x) {
        const Cell c = column ? t.at(x, u) : t.at(u, x);
        if (!c.has_value() || *c != x) { ok = false; break; }
      }
      if (ok) return u;
    }
    return -1;
  };
  Elem hint_top = -1, hint_bottom = -1;
  for (const Claim& c : claims) {
    const bool topu = c.tag == ClassTag::ptnorm || c.tag == ClassTag::tnorm ||
                      c.tag == ClassTag::prl || c.tag == ClassTag::wprl ||
                      c.tag == ClassTag::sprl || c.tag == ClassTag::rl ||
                      c.tag == ClassTag::quasires;
    const bool botu = c.tag == ClassTag::ptconorm || c.tag == ClassTag::tconorm ||
                      c.tag == ClassTag::pcrl || c.tag == ClassTag::zlprl ||
                      c.tag == ClassTag::corl;
    if (!topu && !botu) continue;
    for (const auto& [nm, t] : ops)
      if (nm == c.ops[0]) {
        const Elem u = unit_of(t, /*column=*/!(c.tag == ClassTag::sprl));
        if (u >= 0) (topu ? hint_top : hint_bottom) = u;
      }
  }

  std::vector<Lattice> out;
  auto scan = [&](Elem bot, Elem top) {
    if (bot == top && n > 1) return;
    std::vector<Elem> mids;
    for (Elem x = 0; x < n; ++x)
      if (x != bot && x != top) mids.push_back(x);
    std::vector<std::pair<Elem, Elem>> mpairs;
    for (size_t i = 0; i < mids.size(); ++i)
      for (size_t j = i + 1; j < mids.size(); ++j) mpairs.emplace_back(mids[i], mids[j]);
    std::vector<int> state(mpairs.size(), 0);  // 0 incomparable, 1 a<b, 2 b<a
    auto try_candidate = [&]() {
      std::vector<std::uint8_t> leq(static_cast<size_t>(n) * n, 0);
      for (Elem x = 0; x < n; ++x) {
        leq[x * n + x] = 1;
        leq[bot * n + x] = 1;
        leq[x * n + top] = 1;
      }
      for (size_t i = 0; i < mpairs.size(); ++i) {
        if (state[i] == 1) leq[mpairs[i].first * n + mpairs[i].second] = 1;
        if (state[i] == 2) leq[mpairs[i].second * n + mpairs[i].first] = 1;
      }
      Lattice L = [&]() -> Lattice {
        try {
          return Lattice::from_leq(labels, leq);
        } catch (const Error&) {
          return Lattice::from_pairs({"x"}, {});  // sentinel, filtered below
        }
      }();
      if (L.size() != n) return;
      // closure must not have added relations beyond the chosen states
      for (size_t i = 0; i < mpairs.size(); ++i) {
        const auto [a, b] = mpairs[i];
        if (L.le(a, b) != (state[i] == 1) || L.le(b, a) != (state[i] == 2)) return;
      }
      if (passes(L)) out.push_back(L);
    };
    // odometer over states, last pair fastest
    while (true) {
      try_candidate();
      size_t i = mpairs.size();
      while (i > 0 && state[i - 1] == 2) state[--i] = 0;
      if (i == 0) break;
      ++state[i - 1];
    }
  };

  if (hint_bottom >= 0 && hint_top >= 0) {
    scan(hint_bottom, hint_top);
  } else if (hint_top >= 0) {
    for (Elem b = 0; b < n; ++b)
      if (b != hint_top || n == 1) scan(b, hint_top);
  } else if (hint_bottom >= 0) {
    for (Elem t = 0; t < n; ++t)
      if (t != hint_bottom || n == 1) scan(hint_bottom, t);
  } else {
    for (Elem b = 0; b < n; ++b)
      for (Elem t = 0; t < n; ++t)
        if (b != t || n == 1) scan(b, t);
  }
  if (out.empty()) throw Error(Errc::NoConsistentOrder, "no bounded lattice order fits the claims");
  return out;
}

}  // namespace plw
