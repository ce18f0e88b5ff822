#pragma once

#include <stdexcept>
#include <string>

namespace rankmetric {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition or domain violation (bad q, r out of range, dependent basis...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands belong to different fields") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in finite field") {}
};

// An enumeration would exceed the configured size guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// intersection_volume_closed asked for a radius/distance combination
// without a proved closed form.
class NoClosedForm : public Error {
 public:
  using Error::Error;
};

class NonIntegral : public Error {
 public:
  using Error::Error;
};

}  // namespace rankmetric
