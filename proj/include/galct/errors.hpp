#pragma once

#include <stdexcept>
#include <string>

namespace galct {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

class OrderCapExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class ConductorMismatch : public Error {
 public:
  using Error::Error;
};

/// Imported data (group or table) violates a structural invariant.
class ValidationFailed : public Error {
 public:
  using Error::Error;
};

/// A self-check failed. Indicates a bug, never bad input.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DegreeTooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidK : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace galct
