#include "plw/partial_op.hpp"

#include <array>

namespace plw {

bool is_total(const PartialOp& op) {
  for (const auto& c : op.cells())
    if (!c.has_value()) return false;
  return true;
}

CheckItem commutative_partial(const Lattice& L, const PartialOp& op, const std::string& axiom) {
  const int n = L.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (op.defined(x, y) && (!op.defined(y, x) || op.value(y, x) != op.value(x, y)))
        return CheckItem::fail(axiom, {x, y});
  return CheckItem::ok(axiom);
}

CheckItem associative_directional(const Lattice& L, const PartialOp& op, const std::string& axiom) {
  const int n = L.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        if (!op.defined(y, z)) continue;
        const Elem yz = op.value(y, z);
        if (!op.defined(x, yz)) continue;
        const Elem v = op.value(x, yz);
        if (!op.defined(x, y) || !op.defined(op.value(x, y), z) ||
            op.value(op.value(x, y), z) != v)
          return CheckItem::fail(axiom, {x, y, z});
      }
  return CheckItem::ok(axiom);
}

CheckItem associative_iff(const Lattice& L, const PartialOp& op, const std::string& axiom) {
  const int n = L.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        const bool lhs = op.defined(x, y) && op.defined(op.value(x, y), z);
        const bool rhs = op.defined(y, z) && op.defined(x, op.value(y, z));
        if (lhs != rhs) return CheckItem::fail(axiom, {x, y, z});
        if (lhs && op.value(op.value(x, y), z) != op.value(x, op.value(y, z)))
          return CheckItem::fail(axiom, {x, y, z});
      }
  return CheckItem::ok(axiom);
}

CheckItem associative_total(const Lattice& L, const PartialOp& op, const std::string& axiom) {
  const int n = L.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (op.value(op.value(x, y), z) != op.value(x, op.value(y, z)))
          return CheckItem::fail(axiom, {x, y, z});
  return CheckItem::ok(axiom);
}

CheckItem monotone_partial(const Lattice& L, const PartialOp& op, const std::string& axiom) {
  const int n = L.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (!L.le(x, y)) continue;
      for (Elem h = 0; h < n; ++h)
        for (Elem k = 0; k < n; ++k) {
          if (!L.le(h, k)) continue;
          if (op.defined(x, h) && op.defined(y, k) && !L.le(op.value(x, h), op.value(y, k)))
            return CheckItem::fail(axiom, {x, y, h, k});
        }
    }
  return CheckItem::ok(axiom);
}

CheckItem unit_law(const Lattice& L, const PartialOp& op, Elem unit, bool left_unit,
                   const std::string& axiom) {
  const int n = L.size();
  for (Elem x = 0; x < n; ++x) {
    const Cell c = left_unit ? op.at(unit, x) : op.at(x, unit);
    if (!c.has_value() || *c != x) return CheckItem::fail(axiom, {x});
  }
  return CheckItem::ok(axiom);
}

PartialOp restrict_op(const PartialOp& op, const std::vector<Elem>& sub,
                      std::vector<std::array<Elem, 3>>* escaped) {
  const int m = static_cast<int>(sub.size());
  std::vector<Elem> pos(op.size(), -1);
  for (int i = 0; i < m; ++i) pos[sub[i]] = i;
  PartialOp out(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const Cell c = op.at(sub[i], sub[j]);
      if (!c.has_value()) continue;
      if (pos[*c] >= 0) {
        out.set(i, j, pos[*c]);
      } else if (escaped) {
        escaped->push_back({sub[i], sub[j], *c});
      }
    }
  return out;
}

Lattice restrict_lattice(const Lattice& L, const std::vector<Elem>& sub) {
  std::vector<std::string> labels;
  labels.reserve(sub.size());
  for (Elem e : sub) labels.push_back(L.label(e));
  const int m = static_cast<int>(sub.size());
  std::vector<std::uint8_t> leq(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) leq[i * m + j] = L.le(sub[i], sub[j]) ? 1 : 0;
  return Lattice::from_leq(std::move(labels), std::move(leq));
}

}  // namespace plw
