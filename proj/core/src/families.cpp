#include "plw/families.hpp"

#include <functional>
#include <sstream>

#include "plw/derive.hpp"

namespace plw {

namespace {

std::vector<std::string> int_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

// Rows are space-separated cell tokens, one row per first argument; '-' is
// an undefined cell; values are element indices.
PartialOp table(int n, const std::vector<std::string>& rows) {
  PartialOp op(n);
  for (int x = 0; x < n; ++x) {
    std::istringstream in(rows[x]);
    std::string tok;
    for (int y = 0; y < n; ++y) {
      in >> tok;
      if (tok != "-") op.set(x, y, std::stoi(tok));
    }
  }
  return op;
}

Lattice lat(const std::vector<std::string>& labels,
            const std::vector<std::pair<int, int>>& covers) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (auto [a, b] : covers) pairs.emplace_back(labels[a], labels[b]);
  return Lattice::from_pairs(labels, pairs);
}

Lattice fig(int which) {
  switch (which) {
    case 1: return lat(int_labels(5), {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
    case 2: return lat(int_labels(5), {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
    case 3: return lat(int_labels(5), {{0, 3}, {3, 1}, {3, 2}, {1, 4}, {2, 4}});
    case 4: return lat(int_labels(4), {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    case 5: return lat(int_labels(6), {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {1, 5}, {2, 5}, {4, 5}});
    case 6: return lat(int_labels(6), {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {2, 5}, {3, 5}, {4, 5}});
    case 7: return lat({"[0]", "[3]"}, {{0, 1}});
    case 8: return lat({"[0]", "[3]", "[4]"}, {{0, 1}, {1, 2}});
    case 9: return lat({"[0]", "[3]", "[4]", "[5]"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  }
  throw Error(Errc::UnknownBuiltin, "fig" + std::to_string(which));
}

Bundle paper_bundle(const std::string& name, Lattice L,
                    std::vector<std::pair<std::string, std::vector<std::string>>> ops,
                    std::vector<Claim> claims) {
  Bundle b;
  b.name = name;
  const int n = L.size();
  b.lattice = std::move(L);
  for (auto& [opname, rows] : ops) b.add_op(opname, table(n, rows));
  b.claims = std::move(claims);
  return b;
}

// ---- rational-grid families ----

using GridFn = std::function<std::optional<Rational>(const Rational&, const Rational&)>;

PartialOp grid_op(const std::vector<Rational>& vals, const GridFn& fn) {
  const int n = static_cast<int>(vals.size());
  PartialOp op(n);
  auto at = [&](const Rational& v) -> int {
    for (int i = 0; i < n; ++i)
      if (vals[i] == v) return i;
    throw Error(Errc::GridNotClosed, "value " + v.str() + " escapes the grid");
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto v = fn(vals[i], vals[j]);
      if (v) op.set(i, j, at(*v));
    }
  return op;
}

Rational rmin(const Rational& a, const Rational& b) { return a <= b ? a : b; }
Rational rmax(const Rational& a, const Rational& b) { return a <= b ? b : a; }

Bundle grid_bundle(const std::string& name, int d,
                   const std::vector<std::pair<std::string, GridFn>>& fns,
                   std::vector<Claim> claims) {
  if (d < 1) throw Error(Errc::BadParams, "denominator must be >= 1");
  Bundle b;
  b.name = name;
  b.lattice = grid_lattice(d);
  const auto vals = grid_values(d);
  for (const auto& [opname, fn] : fns) b.add_op(opname, grid_op(vals, fn));
  b.claims = std::move(claims);
  return b;
}

Rational require_on_grid(const Rational& alpha, int d) {
  for (const Rational& v : grid_values(d))
    if (v == alpha) return alpha;
  throw Error(Errc::BadParams, "alpha " + alpha.str() + " not on the grid");
}

// ---- effect algebras ----

struct LeaSpec {
  std::vector<std::string> plus_rows;
  std::vector<int> comp;
  std::vector<std::pair<int, int>> covers;
};

Bundle lea_bundle(const std::string& name, const LeaSpec& s) {
  const int n = static_cast<int>(s.comp.size());
  Bundle b;
  b.name = name;
  b.lattice = lat(int_labels(n), s.covers);
  b.add_op("plus", table(n, s.plus_rows));
  b.add_unary("comp", UnaryOp{std::vector<Elem>(s.comp.begin(), s.comp.end())});
  b.claims = {{ClassTag::ea, {"plus", "comp"}}, {ClassTag::lea, {"plus", "comp"}}};
  return b;
}

LeaSpec lea_spec(const std::string& key) {
  if (key == "bool2") return {{"0 1", "1 -"}, {1, 0}, {{0, 1}}};
  if (key == "chain3") return {{"0 1 2", "1 2 -", "2 - -"}, {2, 1, 0}, {{0, 1}, {1, 2}}};
  if (key == "mv4")
    return {{"0 1 2 3", "1 2 3 -", "2 3 - -", "3 - - -"},
            {3, 2, 1, 0},
            {{0, 1}, {1, 2}, {2, 3}}};
  if (key == "diamond")
    return {{"0 1 2 3", "1 - 3 -", "2 3 - -", "3 - - -"},
            {3, 2, 1, 0},
            {{0, 1}, {0, 2}, {1, 3}, {2, 3}}};
  if (key == "diamondself")
    return {{"0 1 2 3", "1 3 - -", "2 - 3 -", "3 - - -"},
            {3, 1, 2, 0},
            {{0, 1}, {0, 2}, {1, 3}, {2, 3}}};
  if (key == "mo2")
    return {{"0 1 2 3 4 5", "1 - 5 - - -", "2 5 - - - -", "3 - - - 5 -", "4 - - 5 - -",
             "5 - - - - -"},
            {5, 2, 1, 4, 3, 0},
            {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}}};
  throw Error(Errc::UnknownBuiltin, "lea:" + key);
}

Bundle quasires_bundle(const std::string& name, const std::string& lea_key) {
  Bundle base = lea_bundle("tmp", lea_spec(lea_key));
  EffectAlgebra E = EffectAlgebra::from_bundle(base);
  Bundle b;
  b.name = name;
  b.lattice = E.order();
  b.add_op("and", lea_tnorm(E));
  b.add_op("imp", sasaki_arrow(E));
  b.add_unary("comp", E.comp());
  b.claims = {{ClassTag::quasires, {"and", "imp", "comp"}}};
  return b;
}

const Rational kHalf{1, 2};

}  // namespace

std::vector<Rational> grid_values(int denominator) {
  std::vector<Rational> out;
  for (int k = 0; k <= denominator; ++k) out.emplace_back(k, denominator);
  return out;
}

Lattice grid_lattice(int denominator) {
  const auto vals = grid_values(denominator);
  std::vector<std::string> labels;
  for (const auto& v : vals) labels.push_back(v.str());
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < denominator; ++i) covers.emplace_back(i, i + 1);
  return lat(labels, covers);
}

Bundle builtin(const std::string& id, const BuiltinParams& params) {
  const Claim ptn{ClassTag::ptnorm, {"and"}};
  const Claim ptc{ClassTag::ptconorm, {"or"}};
  const Claim prl{ClassTag::prl, {"and", "imp"}};
  const Claim pap{ClassTag::pap, {"and", "imp"}};
  const Claim wprl{ClassTag::wprl, {"and", "imp"}};
  const Claim pcrl{ClassTag::pcrl, {"or", "coimp"}};

  if (id == "ex2.11")
    return paper_bundle(id, fig(1),
                        {{"and", {"- - - - 0", "- - 0 - 1", "- 0 1 - 2", "- - - 0 3", "0 1 2 3 4"}}},
                        {ptn});
  if (id == "ex2.12")
    return paper_bundle(id, fig(2),
                        {{"and", {"- - - - 0", "- - - 0 1", "- - 0 - 2", "- 0 - - 3", "0 1 2 3 4"}}},
                        {ptn});
  if (id == "ex3.4")
    return paper_bundle(id, fig(3),
                        {{"and", {"- - - - 0", "- 3 3 2 1", "- 3 3 2 2", "- 2 2 3 3", "0 1 2 3 4"}},
                         {"imp", {"4 4 4 4 4", "- 4 4 4 4", "- 4 4 4 4", "- 4 4 4 4", "0 1 2 3 4"}}},
                        {ptn, {ClassTag::pfi, {"imp"}}});
  if (id == "ex4.11")
    return paper_bundle(id, fig(4),
                        {{"and", {"- - 0 0", "- 1 - 1", "0 - 2 2", "0 1 2 3"}},
                         {"imp", {"3 - - -", "2 3 - -", "0 - - -", "0 1 - -"}}},
                        {prl, pap});
  if (id == "ex4.12")
    return paper_bundle(id, fig(1),
                        {{"and", {"- - - - 0", "- - - 0 1", "- - 2 - 2", "- 0 - 3 3", "0 1 2 3 4"}},
                         {"imp", {"4 4 4 4 4", "3 4 4 - 4", "3 - 4 - 4", "2 2 - 4 4", "0 1 2 3 4"}}},
                        {prl, pap});
  if (id == "ex4.20")
    return paper_bundle(id, fig(4),
                        {{"and", {"- - - 0", "- - 0 1", "- 0 - 2", "0 1 2 3"}},
                         {"imp", {"3 - - 3", "- 3 - 3", "- 1 3 3", "0 1 2 3"}}},
                        {wprl});
  if (id == "ex4.21")
    return paper_bundle(id, fig(1),
                        {{"and", {"- - - - 0", "- - - 0 1", "- - 2 0 2", "- 0 0 3 3", "0 1 2 3 4"}},
                         {"imp", {"4 4 4 4 4", "3 4 4 - 4", "3 - 4 - 4", "- - - 4 4", "0 1 2 3 4"}}},
                        {wprl});
  if (id == "ex4.22")
    return paper_bundle(
        id, fig(5),
        {{"and",
          {"0 - - 0 0 0", "- - - - - 1", "- - - - - 2", "0 - - 0 0 3", "0 - - 0 4 4",
           "0 1 2 3 4 5"}},
         {"imp",
          {"5 5 5 5 5 5", "- 5 - - - 5", "- - 5 - - 5", "4 - - 5 5 5", "3 - - 3 5 5",
           "0 1 2 3 4 5"}}},
        {wprl});
  if (id == "ex4.23")
    return paper_bundle(
        id, fig(6),
        {{"and",
          {"- - - - - 0", "- - 0 - - 1", "- 0 2 - - 2", "0 - - 0 - 3", "0 - - - 0 4",
           "0 1 2 3 4 5"}},
         {"imp",
          {"5 5 5 5 5 5", "2 5 - - - 5", "1 1 5 - - 5", "3 - - 5 - 5", "4 - - - 5 5",
           "0 1 2 3 4 5"}}},
        {wprl});
  if (id == "ex5.10")
    return paper_bundle(id, fig(1),
                        {{"or", {"0 1 2 3 4", "1 2 2 - -", "2 2 2 - -", "3 - - 3 -", "4 - - - -"}}},
                        {ptc});
  if (id == "ex5.11")
    return paper_bundle(id, fig(2),
                        {{"or", {"0 1 2 3 4", "1 1 - - -", "2 - 2 - -", "3 - - 3 -", "4 - - - -"}}},
                        {ptc});
  if (id == "ex5.15")
    return paper_bundle(id, fig(4),
                        {{"or", {"0 1 2 3", "1 - - -", "2 - - -", "3 - - 3"}},
                         {"coimp", {"0 - - -", "- 1 3 1", "- 3 2 2", "- - - 3"}}},
                        {pcrl});
  if (id == "ex5.16")
    return paper_bundle(id, fig(1),
                        {{"or", {"0 1 2 3 4", "1 - - - -", "2 - - - -", "3 - - - -", "4 - - - -"}},
                         {"coimp", {"0 0 0 0 0", "- 1 - - -", "- - 2 - 2", "- 2 2 3 0", "- - - - 4"}}},
                        {pcrl});
  if (id == "ex6.10")
    return paper_bundle(id, fig(4),
                        {{"and", {"- - - 0", "- 1 0 1", "- 0 - 2", "0 1 2 3"}},
                         {"imp", {"3 3 - 3", "2 3 - 3", "1 - 3 3", "0 1 2 3"}}},
                        {wprl});
  if (id == "ex6.22")
    return paper_bundle(id, fig(7), {{"and", {"- 0", "0 1"}}, {"imp", {"1 -", "- 1"}}}, {prl});
  if (id == "ex6.23")
    return paper_bundle(id, fig(8),
                        {{"and", {"- - 0", "- 0 1", "0 1 2"}},
                         {"imp", {"- - -", "- 2 -", "0 - 2"}}},
                        {prl});
  if (id == "ex6.24")
    return paper_bundle(id, fig(9),
                        {{"and", {"- - - 0", "- 0 - 1", "- - 0 2", "0 1 2 3"}},
                         {"imp", {"3 - - -", "- 3 - -", "- - 3 -", "0 - - 3"}}},
                        {prl});

  if (id == "intro-conj-binary")
    return paper_bundle(id, lat({"0", "v", "s", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}),
                        {{"and", {"0 0 0 -", "0 1 - -", "0 - - -", "- - - -"}}}, {});
  if (id == "intro-conj-unary")
    return paper_bundle(id, lat({"0", "a", "s", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}),
                        {{"and", {"- - - -", "- 1 0 -", "- - - -", "- - - -"}}}, {});

  if (id.rfind("fig", 0) == 0 && id.size() == 4 && id[3] >= '1' && id[3] <= '9') {
    Bundle b;
    b.name = id;
    b.lattice = fig(id[3] - '0');
    return b;
  }

  if (id == "chain") {
    const int n = params.n.value_or(2);
    if (n < 1) throw Error(Errc::BadParams, "chain size must be >= 1");
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    Bundle b;
    b.name = id;
    b.lattice = lat(int_labels(n), covers);
    PartialOp mn(n), godel(n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        mn.set(x, y, std::min(x, y));
        godel.set(x, y, x <= y ? n - 1 : y);
      }
    b.add_op("and", std::move(mn));
    b.add_op("imp", std::move(godel));
    b.claims = {ptn, {ClassTag::tnorm, {"and"}}, {ClassTag::rl, {"and", "imp"}},
                {ClassTag::fi, {"imp"}}};
    return b;
  }

  if (id.rfind("grid:", 0) == 0) {
    const std::string fam = id.substr(5);
    const int d = params.denominator.value_or(fam == "ex6.6" || fam == "ex6.7" ? 10 : 2);
    const Rational one{1};
    const Rational zero{0};
    if (fam == "ex2.6")
      return grid_bundle(id, d,
                         {{"and", [&](const Rational& a, const Rational& b) -> std::optional<Rational> {
                             if (a <= kHalf && b <= kHalf) return std::nullopt;
                             return rmin(a, b);
                           }}},
                         {ptn});
    if (fam == "ex2.7")
      return grid_bundle(id, d,
                         {{"and", [&](const Rational& a, const Rational& b) -> std::optional<Rational> {
                             if ((a >= kHalf && b >= kHalf) || a == one || b == one) return rmin(a, b);
                             return std::nullopt;
                           }}},
                         {ptn});
    if (fam == "ex2.8" || fam == "ex2.9" || fam == "ex2.10") {
      const Rational bound = fam == "ex2.8"   ? one
                             : fam == "ex2.9" ? kHalf
                                              : require_on_grid(params.alpha.value_or(kHalf), d);
      return grid_bundle(id, d,
                         {{"and", [=](const Rational& a, const Rational& b) -> std::optional<Rational> {
                             if (a + b <= bound || a == one || b == one) return rmin(a, b);
                             return std::nullopt;
                           }}},
                         {ptn});
    }
    if (fam == "ex5.5")
      return grid_bundle(id, d,
                         {{"or", [&](const Rational& a, const Rational& b) -> std::optional<Rational> {
                             if (a >= kHalf && b >= kHalf) return std::nullopt;
                             return rmax(a, b);
                           }}},
                         {ptc});
    if (fam == "ex5.6")
      return grid_bundle(id, d,
                         {{"or", [&](const Rational& a, const Rational& b) -> std::optional<Rational> {
                             if ((a <= kHalf && b <= kHalf) || a == zero || b == zero) return rmax(a, b);
                             return std::nullopt;
                           }}},
                         {ptc});
    if (fam == "ex5.7" || fam == "ex5.8" || fam == "ex5.9") {
      const Rational bound = fam == "ex5.7"   ? one
                             : fam == "ex5.8" ? kHalf
                                              : require_on_grid(params.alpha.value_or(kHalf), d);
      return grid_bundle(id, d,
                         {{"or", [=](const Rational& a, const Rational& b) -> std::optional<Rational> {
                             if (a + b <= bound || a == zero || b == zero) return rmax(a, b);
                             return std::nullopt;
                           }}},
                         {ptc});
    }
    if (fam == "ex6.5")
      return grid_bundle(id, d,
                         {{"and", [&](const Rational& a, const Rational& b) -> std::optional<Rational> {
                             if (a <= kHalf && b <= kHalf) return std::nullopt;
                             return rmin(a, b);
                           }},
                          {"imp", [&](const Rational& a, const Rational& b) -> std::optional<Rational> {
                             return a <= b ? one : b;
                           }}},
                         {prl, ptn});
    if (fam == "ex6.6" || fam == "ex6.7") {
      const Rational alpha = fam == "ex6.6" ? one : require_on_grid(params.alpha.value_or(kHalf), d);
      return grid_bundle(id, d,
                         {{"and", [=](const Rational& a, const Rational& b) -> std::optional<Rational> {
                             if (a + b <= alpha || a == one || b == one) return rmin(a, b);
                             return std::nullopt;
                           }},
                          {"imp", [=](const Rational& a, const Rational& b) -> std::optional<Rational> {
                             if (a <= b) return one;
                             // natural-sense subtraction, clamped at 0
                             const Rational diff = alpha < a ? Rational{0} : alpha - a;
                             return rmax(diff, b);
                           }}},
                         {prl});
    }
    throw Error(Errc::UnknownBuiltin, id);
  }

  if (id.rfind("lea:", 0) == 0) return lea_bundle(id, lea_spec(id.substr(4)));
  if (id.rfind("qr:", 0) == 0) return quasires_bundle(id, id.substr(3));

  if (id == "zl:luk") {
    const int d = params.denominator.value_or(2);
    if (d < 1) throw Error(Errc::BadParams, "denominator must be >= 1");
    const int n = d + 1;
    Bundle b;
    b.name = id;
    b.lattice = grid_lattice(d);
    PartialOp plus(n), diff(n);
    std::vector<Elem> comp(n);
    for (Elem x = 0; x < n; ++x) {
      comp[x] = d - x;
      for (Elem y = 0; y < n; ++y) {
        if (x + y <= d) plus.set(x, y, x + y);
        if (y <= x) diff.set(x, y, x - y);
      }
    }
    b.add_op("or", std::move(plus));
    b.add_op("coimp", std::move(diff));
    b.add_unary("comp", UnaryOp{std::move(comp)});
    b.claims = {{ClassTag::zlprl, {"or", "coimp"}}, {ClassTag::pcrl, {"or", "coimp"}},
                {ClassTag::ea, {"or", "comp"}}, {ClassTag::lea, {"or", "comp"}}};
    return b;
  }

  if (id == "corl:max") {
    const int n = params.n.value_or(3);
    if (n < 2) throw Error(Errc::BadParams, "corl:max needs at least 2 elements");
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    Bundle b;
    b.name = id;
    b.lattice = lat(int_labels(n), covers);
    PartialOp mx(n), res(n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        mx.set(x, y, std::max(x, y));
        res.set(x, y, x <= y ? 0 : x);
      }
    b.add_op("or", std::move(mx));
    b.add_op("coimp", std::move(res));
    b.claims = {{ClassTag::corl, {"or", "coimp"}}, {ClassTag::coap, {"or", "coimp"}},
                {ClassTag::pcrl, {"or", "coimp"}}, {ClassTag::zlprl, {"or", "coimp"}},
                {ClassTag::ptconorm, {"or"}}, {ClassTag::tconorm, {"or"}}};
    return b;
  }

  throw Error(Errc::UnknownBuiltin, "'" + id + "'");
}

std::vector<std::string> builtin_names() {
  return {
      "ex2.11", "ex2.12", "ex3.4",  "ex4.11", "ex4.12", "ex4.20", "ex4.21", "ex4.22",
      "ex4.23", "ex5.10", "ex5.11", "ex5.15", "ex5.16", "ex6.10", "ex6.22", "ex6.23",
      "ex6.24", "intro-conj-unary", "intro-conj-binary",
      "fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9",
      "chain",
      "grid:ex2.6", "grid:ex2.7", "grid:ex2.8", "grid:ex2.9", "grid:ex2.10",
      "grid:ex5.5", "grid:ex5.6", "grid:ex5.7", "grid:ex5.8", "grid:ex5.9",
      "grid:ex6.5", "grid:ex6.6", "grid:ex6.7",
      "lea:bool2", "lea:chain3", "lea:mv4", "lea:diamond", "lea:diamondself", "lea:mo2",
      "qr:bool2", "qr:chain3", "qr:mv4", "qr:diamond", "qr:diamondself", "qr:mo2",
      "zl:luk", "corl:max",
  };
}

std::vector<Bundle> builtin_registry() {
  std::vector<Bundle> out;
  for (const std::string& id : builtin_names()) out.push_back(builtin(id));
  return out;
}

}  // namespace plw
