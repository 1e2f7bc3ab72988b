#pragma once

#include <stdexcept>
#include <string>

namespace flagradon {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidCartanType : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct UnsupportedFamily : Error {
  using Error::Error;
};

struct NotDominant : Error {
  using Error::Error;
};

struct NotNested : Error {
  using Error::Error;
};

struct InvalidSpec : Error {
  using Error::Error;
};

struct NoExtremalPair : Error {
  using Error::Error;
};

// Enumeration ran past the configured element cap. Carries how far it got.
struct BudgetExceeded : Error {
  long long partial_count;
  BudgetExceeded(const std::string& what, long long partial)
      : Error(what), partial_count(partial) {}
};

// A redundant internal computation disagreed with its twin. Never expected;
// indicates a bug, not bad input.
struct ConsistencyError : Error {
  using Error::Error;
};

}  // namespace flagradon
