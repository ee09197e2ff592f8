#pragma once

#include <stdexcept>
#include <string>

namespace angulate {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (bad parameters,
/// unknown vertex, diagonal not in the angulation, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured size or work budget was exceeded. Callers treat this as
/// "inconclusive", never as a failed check.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Input text or JSON could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace angulate
