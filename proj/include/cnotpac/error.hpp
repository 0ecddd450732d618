#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cnotpac {

/// Operand shapes or qubit counts do not agree.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation was violated by its inputs.
class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::runtime_error {
 public:
  SingularMatrix() : std::runtime_error("matrix is singular over GF(2)") {}
  using std::runtime_error::runtime_error;
};

/// A CNOT circuit was requested for a Θ block without full rank.
class SingularTheta : public SingularMatrix {
 public:
  SingularTheta() : SingularMatrix("theta block is not full rank") {}
};

/// An exhaustive routine was asked to work beyond its configured size limit.
class EnumerationLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Per-sample constraints of a single-measurement batch have no common point.
class EmptyIntersection : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed external input. `line` is 1-based, 0 when not line oriented.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cnotpac
