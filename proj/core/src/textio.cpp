#include "plw/textio.hpp"

#include <sstream>

namespace plw {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::string body = line;
  if (const auto hash = body.find('#'); hash != std::string::npos) body.erase(hash);
  std::istringstream in(body);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void syntax(int line, const std::string& what) {
  throw Error(Errc::SyntaxError, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

Bundle parse_structure(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  std::string name;
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> order_pairs;
  struct RawOp {
    std::string name;
    std::vector<std::vector<std::string>> rows;  // row label first
    int line;
  };
  std::vector<RawOp> raw_ops;
  std::vector<std::pair<std::string, std::vector<std::string>>> raw_unaries;
  std::vector<std::pair<std::string, std::vector<std::string>>> raw_claims;
  bool seen_structure = false, seen_end = false;
  RawOp* open_op = nullptr;

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (seen_end) syntax(lineno, "content after 'end'");
    const std::string& head = toks[0];

    if (head == "structure") {
      if (seen_structure) syntax(lineno, "duplicate 'structure'");
      if (toks.size() != 2) syntax(lineno, "expected: structure <name>");
      name = toks[1];
      seen_structure = true;
      continue;
    }
    if (!seen_structure) syntax(lineno, "file must start with 'structure <name>'");

    if (head == "elements:") {
      if (!labels.empty()) syntax(lineno, "duplicate 'elements:'");
      labels.assign(toks.begin() + 1, toks.end());
      if (labels.empty()) syntax(lineno, "at least one element required");
      open_op = nullptr;
      continue;
    }
    if (head == "order:") {
      for (size_t i = 1; i < toks.size(); ++i) {
        if (toks[i] == ",") continue;
        const auto pos = toks[i].find("<=");
        if (pos == std::string::npos) syntax(lineno, "order items look like a<=b");
        order_pairs.emplace_back(toks[i].substr(0, pos), toks[i].substr(pos + 2));
      }
      open_op = nullptr;
      continue;
    }
    if (head == "op") {
      if (toks.size() != 3 || toks[2] != ":") syntax(lineno, "expected: op <name> :");
      raw_ops.push_back({toks[1], {}, lineno});
      open_op = &raw_ops.back();
      continue;
    }
    if (head == "unary") {
      if (toks.size() < 4 || toks[2] != ":") syntax(lineno, "expected: unary <name> : <cells>");
      raw_unaries.emplace_back(toks[1], std::vector<std::string>(toks.begin() + 3, toks.end()));
      open_op = nullptr;
      continue;
    }
    if (head == "claim:") {
      if (toks.size() < 4 || toks[2] != "(" || toks.back() != ")")
        syntax(lineno, "expected: claim: <classtag> ( <op> [, <op>] )");
      std::vector<std::string> ops;
      for (size_t i = 3; i + 1 < toks.size(); ++i)
        if (toks[i] != ",") ops.push_back(toks[i]);
      raw_claims.emplace_back(toks[1], ops);
      open_op = nullptr;
      continue;
    }
    if (head == "end") {
      seen_end = true;
      open_op = nullptr;
      continue;
    }
    // otherwise: a table row "<lbl> : <cells>" belonging to the open op
    if (open_op == nullptr) syntax(lineno, "unexpected line '" + head + "'");
    if (toks.size() < 2 || toks[1] != ":") syntax(lineno, "table rows look like: <lbl> : <cells>");
    open_op->rows.push_back(toks);
  }
  if (!seen_structure) throw Error(Errc::SyntaxError, "empty structure file");
  if (!seen_end) throw Error(Errc::SyntaxError, "missing 'end'");
  if (labels.empty()) throw Error(Errc::SyntaxError, "missing 'elements:'");

  Bundle b;
  b.name = name;
  b.lattice = Lattice::from_pairs(labels, order_pairs);
  const int n = b.lattice.size();

  for (const RawOp& r : raw_ops) {
    if (static_cast<int>(r.rows.size()) != n)
      throw Error(Errc::RaggedTable, "op '" + r.name + "' has " + std::to_string(r.rows.size()) +
                                         " rows, expected " + std::to_string(n));
    PartialOp op(n);
    for (const auto& row : r.rows) {
      const Elem x = b.lattice.index_of(row[0]);
      if (static_cast<int>(row.size()) != n + 2)
        throw Error(Errc::RaggedTable, "op '" + r.name + "', row '" + row[0] + "' has " +
                                           std::to_string(row.size() - 2) + " cells, expected " +
                                           std::to_string(n));
      for (int y = 0; y < n; ++y) {
        const std::string& cell = row[y + 2];
        if (cell != "-") op.set(x, y, b.lattice.index_of(cell));
      }
    }
    b.add_op(r.name, std::move(op));
  }
  for (const auto& [uname, cells] : raw_unaries) {
    if (static_cast<int>(cells.size()) != n)
      throw Error(Errc::RaggedTable, "unary '" + uname + "' has " + std::to_string(cells.size()) +
                                         " cells, expected " + std::to_string(n));
    UnaryOp u;
    for (const std::string& cell : cells) u.image.push_back(b.lattice.index_of(cell));
    b.add_unary(uname, std::move(u));
  }
  for (const auto& [tag, ops] : raw_claims) {
    Claim c{class_tag_from(tag), ops};
    if (static_cast<int>(ops.size()) != class_tag_arity(c.tag))
      throw Error(Errc::BadArity, "claim " + tag + " wants " +
                                      std::to_string(class_tag_arity(c.tag)) + " op name(s)");
    for (size_t i = 0; i < ops.size(); ++i) {
      const bool unary_slot = (c.tag == ClassTag::negation && i == 0) ||
                              ((c.tag == ClassTag::ea || c.tag == ClassTag::lea) && i == 1) ||
                              (c.tag == ClassTag::quasires && i == 2);
      if (unary_slot ? !b.has_unary(ops[i]) : !b.has_op(ops[i]))
        throw Error(Errc::SyntaxError, "claim " + tag + " references unknown op '" + ops[i] + "'");
    }
    b.claims.push_back(std::move(c));
  }
  return b;
}

std::string serialize_structure(const Bundle& b) {
  std::ostringstream out;
  const Lattice& L = b.lattice;
  out << "structure " << (b.name.empty() ? "unnamed" : b.name) << "\n";
  out << "elements:";
  for (const auto& l : L.labels()) out << " " << l;
  out << "\n";
  const auto covers = L.cover_pairs();
  if (!covers.empty()) {
    out << "order:";
    bool first = true;
    for (const auto& [a, bb] : covers) {
      out << (first ? " " : " , ") << L.label(a) << "<=" << L.label(bb);
      first = false;
    }
    out << "\n";
  }
  for (const auto& [opname, op] : b.ops) {
    out << "op " << opname << " :\n";
    for (Elem x = 0; x < L.size(); ++x) {
      out << "  " << L.label(x) << " :";
      for (Elem y = 0; y < L.size(); ++y) {
        if (op.defined(x, y)) out << " " << L.label(op.value(x, y));
        else out << " -";
      }
      out << "\n";
    }
  }
  for (const auto& [uname, u] : b.unaries) {
    out << "unary " << uname << " :";
    for (Elem x = 0; x < L.size(); ++x) out << " " << L.label(u(x));
    out << "\n";
  }
  for (const Claim& c : b.claims) {
    out << "claim: " << class_tag_name(c.tag) << " (";
    for (size_t i = 0; i < c.ops.size(); ++i) out << (i ? " , " : " ") << c.ops[i];
    out << " )\n";
  }
  out << "end\n";
  return out.str();
}

Json witness_json(const Lattice& L, const Witness& w) {
  Json j;
  j["axiom"] = w.axiom;
  Json elems = Json::array();
  for (Elem e : w.elems) elems.push_back(L.label(e));
  j["elements"] = elems;
  return j;
}

Json report_json(const Bundle& b, const CheckReport& r) {
  Json j;
  j["class"] = r.class_tag;
  j["overall"] = r.pass() ? "pass" : "fail";
  Json axioms = Json::array();
  for (const CheckItem& it : r.items) {
    Json a;
    a["axiom"] = it.axiom;
    a["pass"] = it.pass;
    Json ws = Json::array();
    for (const Witness& w : it.witnesses) ws.push_back(witness_json(b.lattice, w));
    a["witnesses"] = ws;
    axioms.push_back(a);
  }
  j["axioms"] = axioms;
  return j;
}

Json report_json(const Bundle& b, const TheoremVerdict& v) {
  Json j;
  j["theorem"] = v.theorem;
  j["scope"] = v.scope;
  j["status"] = theorem_status_name(v.status);
  Json ws = Json::array();
  for (const Witness& w : v.witnesses) ws.push_back(witness_json(b.lattice, w));
  j["witnesses"] = ws;
  return j;
}

std::string export_dot(const Lattice& L, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  out << "  { rank=source; \"" << L.label(L.bottom()) << "\"; }\n";
  for (Elem x = 0; x < L.size(); ++x) out << "  \"" << L.label(x) << "\";\n";
  for (const auto& [a, b] : L.cover_pairs())
    out << "  \"" << L.label(a) << "\" -> \"" << L.label(b) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace plw
