#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace torva {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Incompatible scalar modes (different discriminants) in one expression.
struct ModeMismatch : Error {
  using Error::Error;
};

// Malformed input; carries a 1-based line number when known.
struct ParseError : Error {
  int line;
  explicit ParseError(const std::string& what, int line_number = 0)
      : Error(what), line(line_number) {}
};

// An offset that is not a member of the value group.
struct GammaViolation : Error {
  using Error::Error;
};

// Precondition violation on otherwise well-formed data.
struct DomainError : Error {
  using Error::Error;
};

// A cone contains a line where pointedness is required.
struct AdmissibilityError : Error {
  using Error::Error;
};

// complete_extension could not certify a result.
struct ExtensionFailure : Error {
  std::vector<std::string> conflicts;
  ExtensionFailure(const std::string& what, std::vector<std::string> cs)
      : Error(what), conflicts(std::move(cs)) {}
};

// A condition that indicates a bug rather than bad input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace torva
