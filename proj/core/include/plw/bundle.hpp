#pragma once

#include <map>
#include <string>
#include <vector>

#include "plw/lattice.hpp"
#include "plw/partial_op.hpp"

namespace plw {

// Structure class tags; the fixed registry shared by files, claims and the CLI.
enum class ClassTag {
  ptnorm, ptconorm, tnorm, tconorm, negation, fi, pfi, ea, lea, quasires,
  pap, prl, sprl, wprl, coap, corl, pcrl, zlprl, rl,
};

const char* class_tag_name(ClassTag t);
ClassTag class_tag_from(const std::string& name);        // throws UnknownClassTag
std::vector<ClassTag> all_class_tags();
int class_tag_arity(ClassTag t);                         // number of op names in a claim

struct Claim {
  ClassTag tag;
  std::vector<std::string> ops;  // binary and/or unary op names, arity per tag

  bool operator==(const Claim&) const = default;
};

// A lattice plus named partial/unary operations plus class claims.
struct Bundle {
  std::string name;
  Lattice lattice;
  std::vector<std::pair<std::string, PartialOp>> ops;      // insertion order kept
  std::vector<std::pair<std::string, UnaryOp>> unaries;
  std::vector<Claim> claims;

  const PartialOp& op(const std::string& opname) const;    // throws UnknownElement-style
  const UnaryOp& unary(const std::string& opname) const;
  bool has_op(const std::string& opname) const;
  bool has_unary(const std::string& opname) const;
  void add_op(const std::string& opname, PartialOp t);     // throws DuplicateOpName
  void add_unary(const std::string& opname, UnaryOp t);
};

}  // namespace plw
