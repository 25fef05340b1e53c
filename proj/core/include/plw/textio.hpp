#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "plw/bundle.hpp"
#include "plw/filters.hpp"
#include "plw/report.hpp"
#include "plw/theorems.hpp"

namespace plw {

using Json = nlohmann::json;  // std::map-backed: keys serialize sorted

// Parses the line-oriented structure grammar:
//
//   structure <name>
//   elements: <lbl> <lbl> ...
//   order: <lbl><=<lbl> , ...        # reflexive/transitive closure implied
//   op <opname> :
//     <lbl> : <cell> <cell> ...      # one row per element, '-' = undefined
//   unary <opname> : <cell> ...
//   claim: <classtag> ( <opname> [, <opname>] )
//   end
//
// '#' starts a comment; tokens are whitespace-separated. Throws SyntaxError
// (with a line number), UnknownElement, RaggedTable, DuplicateOpName.
Bundle parse_structure(const std::string& text);

// Canonical serialization; parse(serialize(b)) is the identity on the
// semantic bundle, and serialize(parse(serialize(b))) is byte-identical.
std::string serialize_structure(const Bundle& b);

// Report fragments with stable key order; witnesses appear as label tuples.
Json report_json(const Bundle& b, const CheckReport& r);
Json report_json(const Bundle& b, const TheoremVerdict& v);
Json witness_json(const Lattice& L, const Witness& w);

// DOT export: cover edges only, bottom at the rank source.
std::string export_dot(const Lattice& L, const std::string& name = "lattice");

}  // namespace plw
