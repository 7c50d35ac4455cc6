#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ineqcert {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input lies outside the validity domain of the requested operation.
/// `predicate()` names the violated condition, e.g. "r < s+1".
class DomainError : public Error {
 public:
  explicit DomainError(std::string predicate)
      : Error("domain error: " + predicate), predicate_(std::move(predicate)) {}
  DomainError(std::string predicate, const std::string& detail)
      : Error("domain error: " + predicate + " (" + detail + ")"),
        predicate_(std::move(predicate)) {}

  const std::string& predicate() const noexcept { return predicate_; }

 private:
  std::string predicate_;
};

/// Arithmetic that has no real value (0^-1, (-2)^(1/2), x/0, ...).
class EvaluationError : public DomainError {
 public:
  enum class Kind {
    NegativeBaseFractionalExponent,
    ZeroToNegativePower,
    DivisionByZero,
    NonIntegerExponent,
  };

  explicit EvaluationError(Kind kind) : DomainError(name(kind)), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

  static const char* name(Kind kind) noexcept {
    switch (kind) {
      case Kind::NegativeBaseFractionalExponent: return "NegativeBaseFractionalExponent";
      case Kind::ZeroToNegativePower: return "ZeroToNegativePower";
      case Kind::DivisionByZero: return "DivisionByZero";
      case Kind::NonIntegerExponent: return "NonIntegerExponent";
    }
    return "EvaluationError";
  }

 private:
  Kind kind_;
};

/// Side lengths violate a strict triangle inequality.
class NotATriangle : public DomainError {
 public:
  NotATriangle() : DomainError("not a triangle") {}
};

/// The unit-product bound needs xyz = 1 exactly.
class ProductNotOne : public DomainError {
 public:
  ProductNotOne() : DomainError("xyz != 1") {}
};

/// Raised by interval evaluation when a divisor enclosure straddles zero at
/// the current precision. Callers retry at a higher precision.
class EnclosureUnbounded : public Error {
 public:
  EnclosureUnbounded() : Error("enclosure unbounded: divisor interval contains zero") {}
};

/// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0) return "parse error: " + message;
    return "parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace ineqcert
