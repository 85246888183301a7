#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dbmend {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An atom was looked up in a valuation whose universe does not contain it,
// or two valuations over different universes were combined.
class UniverseMismatchError : public Error {
 public:
  using Error::Error;
};

// A constraint violates a structural requirement (e.g. a head variable
// that is not bound by any body atom).
class MalformedConstraintError : public Error {
 public:
  using Error::Error;
};

// Databases being merged disagree on a predicate's arity.
class SchemaMismatchError : public Error {
 public:
  using Error::Error;
};

// The merged constraint set is classically unsatisfiable over the
// candidate universe; no instance can ever satisfy it.
class IcConflictError : public Error {
 public:
  using Error::Error;
};

// A pair (insert, retract) was passed where a valid repair is required.
class InvalidRepairError : public Error {
 public:
  using Error::Error;
};

// A valuation was passed where a classical model of the constraints is
// required.
class NotAModelError : public Error {
 public:
  using Error::Error;
};

// The constraints admit no model, so the requested model set is empty.
class NoModelError : public Error {
 public:
  using Error::Error;
};

// Repair search was asked for a database whose constraints are
// unsatisfiable; no repair can exist.
class NoRepairError : public Error {
 public:
  using Error::Error;
};

// The brute-force oracle was invoked on a universe above its bound.
class OracleBoundError : public Error {
 public:
  using Error::Error;
};

// Syntax or schema error in a problem file, with source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace dbmend
