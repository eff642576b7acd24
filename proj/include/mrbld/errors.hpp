#pragma once

#include <stdexcept>
#include <string>

namespace mrbld {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input; the message names the offending field.
class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DegreeOutOfRange : public Error {
 public:
  using Error::Error;
};

/// A column of the claimed subspace lies outside the ambient span.
class SubspaceViolation : public Error {
 public:
  using Error::Error;
};

class Underdetermined : public Error {
 public:
  using Error::Error;
};

}  // namespace mrbld
