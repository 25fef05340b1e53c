#pragma once

#include <string>
#include <vector>

#include "plw/bundle.hpp"
#include "plw/report.hpp"

namespace plw {

enum class TheoremStatus { Verified, Counterexample, NotApplicable };

struct TheoremVerdict {
  std::string theorem;
  std::string scope;  // bundle name (or enumeration description)
  TheoremStatus status = TheoremStatus::NotApplicable;
  std::vector<Witness> witnesses;  // counterexamples, or informational tags
};

const char* theorem_status_name(TheoremStatus s);

// The fixed theorem registry.
std::vector<std::string> all_theorem_ids();

// Desk-scale re-verification of one theorem on one bundle. Hypotheses are
// checked first; bundles that do not satisfy them yield NotApplicable.
// Statements whose published form is ambiguous (Thm3.5, Thm4.14) are reported
// as experiments: their Counterexample status carries witnesses but is
// expected on some inputs. Thm3.7 additionally reports "converse-gap"
// witnesses (cells equal to top with incomparable arguments) without
// affecting the forward verdict.
TheoremVerdict verify_theorem(const std::string& id, const Bundle& b);

std::vector<TheoremVerdict> verify_theorems(const std::vector<Bundle>& bundles,
                                            const std::vector<std::string>& ids);

}  // namespace plw
