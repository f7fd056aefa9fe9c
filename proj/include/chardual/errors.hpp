#pragma once

#include <stdexcept>
#include <string>

namespace chardual {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input: cycle notation, JSON schema, CLI values.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Caller violated a documented precondition (n < 2, p not prime, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Group enumeration or brute-force oracle exceeded its size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Cyclotomic operands of different root-of-unity orders.
class OrderMismatch : public Error {
 public:
  using Error::Error;
};

/// A value expected to be a (rational or algebraic) integer is not.
class NotIntegral : public Error {
 public:
  using Error::Error;
};

/// Class functions built on different class structures.
class ClassDataMismatch : public Error {
 public:
  using Error::Error;
};

/// Table file is schema-invalid, non-canonical, or fails the character
/// table invariants.
class TableError : public Error {
 public:
  using Error::Error;
};

/// A multiplicity sequence that no group of the given order produces.
class InconsistentSequence : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold for any correct character table failed.
/// Raised only on internal bugs or corrupted input tables.
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace chardual
