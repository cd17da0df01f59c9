#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace litiquant {

// Base of every error the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A scenario (or request) field violates its constraint.
class ValidationError : public Error {
 public:
  ValidationError(std::string field, std::string constraint)
      : Error(field + ": " + constraint),
        field_(std::move(field)),
        constraint_(std::move(constraint)) {}

  const std::string& field() const noexcept { return field_; }
  const std::string& constraint() const noexcept { return constraint_; }

 private:
  std::string field_;
  std::string constraint_;
};

// Malformed input document. Line and column are 1-based; 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class InvalidGrid : public Error {
 public:
  using Error::Error;
};

class DegenerateBudget : public Error {
 public:
  using Error::Error;
};

class InfeasibleSplit : public Error {
 public:
  using Error::Error;
};

// Black-Scholes inputs outside the domain of ln / division.
class NonPositiveInput : public Error {
 public:
  using Error::Error;
};

// Strike (reasonable bargain) is zero or negative.
class DegenerateStrike : public NonPositiveInput {
 public:
  using NonPositiveInput::NonPositiveInput;
};

class UnpricedQuote : public Error {
 public:
  using Error::Error;
};

class InvalidSweep : public Error {
 public:
  using Error::Error;
};

}  // namespace litiquant
