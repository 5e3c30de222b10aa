#pragma once

#include <stdexcept>
#include <string>

namespace hamloc {

// Malformed input or violated operation precondition (CLI exit 2).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured exploration or size budget was exceeded (CLI exit 3).
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed (CLI exit 1).
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hamloc
