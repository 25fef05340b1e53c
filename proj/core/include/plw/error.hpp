#pragma once

#include <stdexcept>
#include <string>

namespace plw {

// Error codes for construction / parsing / precondition failures. Axiom
// violations discovered by checkers are not errors; they become CheckReport
// entries with witnesses.
enum class Errc {
  NotAPoset,
  MissingBound,
  UnknownElement,
  SyntaxError,
  RaggedTable,
  DuplicateOpName,
  UnknownBuiltin,
  BadParams,
  UnknownClassTag,
  UnknownTheoremId,
  ArrowNotTotal,
  NotTotal,
  BoundaryUndefined,
  NotAPartialTnorm,
  NotAPartialTconorm,
  NotAnLEA,
  NotZlPrl,
  InputNotPFI,
  InputNotNegation,
  NotAFilter,
  NotEquivalence,
  NotACongruence,
  QuotientOrderNotLattice,
  GridNotClosed,
  NoConsistentOrder,
  CapExceeded,
  BadArity,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace plw
