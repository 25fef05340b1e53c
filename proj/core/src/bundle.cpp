#include "plw/bundle.hpp"

#include <array>

namespace plw {

namespace {
struct TagInfo {
  ClassTag tag;
  const char* name;
  int arity;
};
constexpr std::array<TagInfo, 19> kTags{{
    {ClassTag::ptnorm, "ptnorm", 1},
    {ClassTag::ptconorm, "ptconorm", 1},
    {ClassTag::tnorm, "tnorm", 1},
    {ClassTag::tconorm, "tconorm", 1},
    {ClassTag::negation, "negation", 1},
    {ClassTag::fi, "fi", 1},
    {ClassTag::pfi, "pfi", 1},
    {ClassTag::ea, "ea", 2},
    {ClassTag::lea, "lea", 2},
    {ClassTag::quasires, "quasires", 3},
    {ClassTag::pap, "pap", 2},
    {ClassTag::prl, "prl", 2},
    {ClassTag::sprl, "sprl", 2},
    {ClassTag::wprl, "wprl", 2},
    {ClassTag::coap, "coap", 2},
    {ClassTag::corl, "corl", 2},
    {ClassTag::pcrl, "pcrl", 2},
    {ClassTag::zlprl, "zlprl", 2},
    {ClassTag::rl, "rl", 2},
}};
}  // namespace

const char* class_tag_name(ClassTag t) {
  for (const auto& info : kTags)
    if (info.tag == t) return info.name;
  return "?";
}

ClassTag class_tag_from(const std::string& name) {
  for (const auto& info : kTags)
    if (name == info.name) return info.tag;
  throw Error(Errc::UnknownClassTag, "'" + name + "'");
}

std::vector<ClassTag> all_class_tags() {
  std::vector<ClassTag> out;
  for (const auto& info : kTags) out.push_back(info.tag);
  return out;
}

int class_tag_arity(ClassTag t) {
  for (const auto& info : kTags)
    if (info.tag == t) return info.arity;
  return 1;
}

const PartialOp& Bundle::op(const std::string& opname) const {
  for (const auto& [nm, t] : ops)
    if (nm == opname) return t;
  throw Error(Errc::UnknownElement, "no binary op '" + opname + "' in structure '" + name + "'");
}

const UnaryOp& Bundle::unary(const std::string& opname) const {
  for (const auto& [nm, t] : unaries)
    if (nm == opname) return t;
  throw Error(Errc::UnknownElement, "no unary op '" + opname + "' in structure '" + name + "'");
}

bool Bundle::has_op(const std::string& opname) const {
  for (const auto& [nm, t] : ops)
    if (nm == opname) return true;
  return false;
}

bool Bundle::has_unary(const std::string& opname) const {
  for (const auto& [nm, t] : unaries)
    if (nm == opname) return true;
  return false;
}

void Bundle::add_op(const std::string& opname, PartialOp t) {
  if (has_op(opname) || has_unary(opname)) throw Error(Errc::DuplicateOpName, "'" + opname + "'");
  ops.emplace_back(opname, std::move(t));
}

void Bundle::add_unary(const std::string& opname, UnaryOp t) {
  if (has_op(opname) || has_unary(opname)) throw Error(Errc::DuplicateOpName, "'" + opname + "'");
  unaries.emplace_back(opname, std::move(t));
}

}  // namespace plw
