#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace leafcalc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated a documented precondition (chart mismatch, bad index, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Division by the zero rational function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Restriction to the zero section hits a pole.
class SingularRestrictionError : public Error {
 public:
  using Error::Error;
};

/// The leaf-leaf block of a bivector is not invertible.
class HorizontalDegeneracyError : public Error {
 public:
  using Error::Error;
};

/// The leaf 2-form of a geometric data triple is not invertible.
class DataDegeneracyError : public Error {
 public:
  using Error::Error;
};

/// A fiber variable appears in a denominator where a y-jet was required.
class NonPolynomialJetError : public Error {
 public:
  using Error::Error;
};

/// Homological target that is neither a coboundary nor a cocycle.
class MalformedTargetError : public Error {
 public:
  using Error::Error;
};

/// Text or JSON input that does not parse. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0 && column == 0) return message;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace leafcalc
