#pragma once

#include <stdexcept>
#include <string>

namespace graphcode {

/// Operands belong to different hosts (edge sets of different length,
/// vectors of different dimension).
struct HostMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition was violated by the caller.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or search cap was hit before the work completed.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A randomized procedure ran out of its retry budget.
struct BudgetExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries a 1-based location when known.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ", column " +
                                      std::to_string(column) + ": " + what
                                : what),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

}  // namespace graphcode
