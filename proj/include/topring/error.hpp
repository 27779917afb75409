#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace topring {

/// Malformed ring/ideal/topology literal.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition (non-topology, non-group table, zero ring, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A theorem whose hypotheses were met produced a false conclusion. Never expected; a bug if seen.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Work estimate for an n-ary check exceeds the lookup budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultLookupBudget = 10'000'000;

/// Lookup budget for n-ary continuity checks; TOPRING_BUDGET overrides the default.
inline std::uint64_t lookup_budget() {
  if (const char* env = std::getenv("TOPRING_BUDGET"); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return kDefaultLookupBudget;
}

inline void charge_budget(std::uint64_t work, const std::string& what) {
  if (auto budget = lookup_budget(); work > budget) {
    throw BudgetExceeded(what + ": estimated " + std::to_string(work) + " lookups exceeds budget " +
                         std::to_string(budget));
  }
}

}  // namespace topring
