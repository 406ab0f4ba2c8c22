#pragma once

#include <stdexcept>
#include <string>

namespace leflab {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct WrongDegree : Error {
  using Error::Error;
};

struct DegreeOutOfRange : Error {
  using Error::Error;
};

struct NotPrimitive : Error {
  using Error::Error;
};

struct NotASubspace : Error {
  using Error::Error;
};

/// Raised by matrix_of_map when an image vector is outside the codomain span.
/// Doubles as a theorem check: several constructions rely on operators
/// preserving a subspace, and a violation surfaces here.
struct NotInCodomain : Error {
  using Error::Error;
};

struct SyntaxError : Error {
  SyntaxError(int line, int column, const std::string& what)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  explicit SyntaxError(const std::string& what) : Error(what), line(0), column(0) {}
  int line;
  int column;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct UnknownModel : Error {
  using Error::Error;
};

struct ComplexPropertyViolation : Error {
  using Error::Error;
};

struct NotFiltered : Error {
  using Error::Error;
};

}  // namespace leflab
