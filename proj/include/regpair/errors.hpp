#pragma once

#include <stdexcept>
#include <string>

namespace regpair {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A computation would leave Q(i): a polynomial has an irreducible factor of
// degree > 1, a fiber is not Q(i)-rational, or a root could not be recognized.
struct ExactnessError : Error {
  explicit ExactnessError(const std::string& what) : Error(what) {}
};

// Supports that must be disjoint are not.
struct DisjointnessError : Error {
  explicit DisjointnessError(const std::string& what) : Error(what) {}
};

// An operation precondition failed (zero function, repeated points, ...).
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

// Text that could not be parsed; carries a position when one is known.
struct ParseError : Error {
  explicit ParseError(const std::string& what, int line = -1, int column = -1)
      : Error(what), line(line), column(column) {}
  int line;
  int column;
};

// A search or iteration budget ran out.
struct BudgetError : Error {
  explicit BudgetError(const std::string& what) : Error(what) {}
};

}  // namespace regpair
