#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sbrokit/element_set.hpp"

namespace sbrokit {

/// Invalid arguments: out-of-range elements, malformed witnesses, wrong
/// representation, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A catalog entry failed its own quick-checks.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A result guaranteed by a theorem did not materialize. Either the input
/// violates a precondition the caller vouched for, or there is a bug.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A search ran out of budget before reaching a verdict.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Circuit enumeration ran out of budget; carries what was found so far.
class CircuitBudgetExceeded : public BudgetExceeded {
 public:
  CircuitBudgetExceeded(std::vector<ElementSet> partial)
      : BudgetExceeded("circuit enumeration budget exceeded"),
        partial_(std::move(partial)) {}
  const std::vector<ElementSet>& partial() const { return partial_; }

 private:
  std::vector<ElementSet> partial_;
};

}  // namespace sbrokit
