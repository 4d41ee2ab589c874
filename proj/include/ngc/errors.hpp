#pragma once

#include <stdexcept>
#include <string>

namespace ngc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConductorMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// The radicand of a principal square root is not ζ^{2t} for some t.
class NotAnEvenPowerRoot : public Error {
 public:
  using Error::Error;
};

class UnsupportedGroup : public Error {
 public:
  using Error::Error;
};

class InvalidForm : public Error {
 public:
  using Error::Error;
};

class NotBraidable : public Error {
 public:
  using Error::Error;
};

/// An extracted δ or ε quotient is not ±1.
class NonUnitInvariant : public Error {
 public:
  using Error::Error;
};

class SearchSpaceOverflow : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON input. `pointer()` is an RFC 6901 pointer to the offending node.
class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& what)
      : Error(what + " at " + (pointer.empty() ? std::string("/") : pointer)),
        pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace ngc
