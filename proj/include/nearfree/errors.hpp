#pragma once
// Error taxonomy shared by the whole library.
//
// Every failure mode that callers are expected to handle gets its own type;
// InternalError is reserved for broken invariants (a bug in this library,
// never bad user input).  CLI exit codes are derived from these types in
// tools/nearfree.cpp.

#include <stdexcept>
#include <string>

namespace nearfree {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input is outside the mathematical domain of the operation
// (e.g. resultant of two zero polynomials).
struct UndefinedInputError : Error {
  using Error::Error;
};

// The operation is only implemented up to a stated degree bound.
struct UnsupportedDegreeError : Error {
  using Error::Error;
};

// Root isolation / box refinement exceeded its hard depth cap.
// Never silently degrades; the caller sees this instead of a guess.
struct RefinementError : Error {
  using Error::Error;
};

// Arrangement validation failures.
struct InvalidArrangementError : Error {
  using Error::Error;
};

// A singular point falls outside the supported local types
// (node, tacnode, ordinary triple point).
struct UnsupportedSingularityError : Error {
  using Error::Error;
};

// Random shears exhausted without reaching a generic projection.
struct NumericalDegeneracyError : Error {
  using Error::Error;
};

// The graded Milnor dimensions did not stabilise within the scan window.
struct StabilizationError : Error {
  using Error::Error;
};

// File / JSON syntax problems.
struct ParseError : Error {
  using Error::Error;
};

// A library invariant failed (rank-nullity audit, Bezout audit, ...).
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace nearfree
