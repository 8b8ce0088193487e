#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace multistruct {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct FieldMismatch : Error {
  FieldMismatch() : Error("operands belong to different fields") {}
};

struct InvalidField : Error {
  explicit InvalidField(const std::string& why) : Error("invalid field: " + why) {}
};

struct VarSetMismatch : Error {
  VarSetMismatch() : Error("operands use different variable sets") {}
};

struct ZeroPolynomial : Error {
  ZeroPolynomial() : Error("zero polynomial has no leading term") {}
};

struct DegreeOverflow : Error {
  DegreeOverflow() : Error("monomial exponent overflow") {}
};

struct AmbientMismatch : Error {
  AmbientMismatch() : Error("subspaces live in different ambient spaces") {}
};

struct AlgebraMismatch : Error {
  AlgebraMismatch() : Error("ideals belong to different algebras") {}
};

struct NotZeroDimensional : Error {
  NotZeroDimensional()
      : Error("quotient is not finite-dimensional: some variable has no pure power "
              "among the leading monomials") {}
};

struct ZeroRing : Error {
  ZeroRing() : Error("ideal is the unit ideal: the quotient is the zero ring") {}
};

struct NotLocal : Error {
  explicit NotLocal(const std::string& why = "")
      : Error("algebra is not local" + (why.empty() ? "" : ": " + why)) {}
};

/// Raised when an induced map would not be well defined.  Always a bug trap:
/// the callers establish the required inclusions before inducing maps.
struct NotWellDefined : Error {
  explicit NotWellDefined(const std::string& why) : Error("map not well defined: " + why) {}
};

struct DegenerateTarget : Error {
  DegenerateTarget() : Error("pairing target M_m is zero") {}
};

struct InternalInvariantViolation : Error {
  explicit InternalInvariantViolation(const std::string& why)
      : Error("internal invariant violated: " + why) {}
};

/// Syntax error in a problem file, with 1-based position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t col, const std::string& msg)
      : Error("parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}
  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t line_, col_;
};

class UnknownVariable : public ParseError {
 public:
  UnknownVariable(std::size_t line, std::size_t col, const std::string& name)
      : ParseError(line, col, "unknown variable '" + name + "'") {}
};

struct GenerationExhausted : Error {
  GenerationExhausted()
      : Error("corpus generation gave up: 100 consecutive candidates failed validity") {}
};

}  // namespace multistruct
