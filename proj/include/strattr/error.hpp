#pragma once

#include <stdexcept>
#include <string>

namespace strattr {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured work bound (window length, expansion steps, radius) was hit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Malformed spec file, word or substitution text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// The requested information is not computable from a symbolic description,
// e.g. asking for a window of a declared orbit point.
class SymbolicError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. These indicate bugs, not bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace strattr
