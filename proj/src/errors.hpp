#pragma once

#include <stdexcept>
#include <string>

namespace conjforge {

// Error taxonomy shared by the whole library. The C API and the CLI map
// these onto process exit codes: input 2, invariant 3, budget 4.

// Malformed or precondition-violating input (wrong structure kind, bad
// JSON, mismatched domains, ...).
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A constructed object failed one of its own invariants, or an internal
// consistency assertion did not hold.
class InvariantError : public std::runtime_error {
public:
  explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

// An iteration or retry budget was exhausted before the computation
// finished.
class BudgetError : public std::runtime_error {
public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace conjforge
