#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polysse {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes are incompatible (inner dimensions, non-square input, ...).
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the operation's domain (zero polynomial where a
/// nonzero one is required, index out of range, missing ring capability).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Exact division was requested but the divisor does not divide the dividend.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// Input does not have the full row rank the operation requires.
class RankDeficient : public Error {
 public:
  using Error::Error;
};

/// Input is not minor left prime.
class NotMlp : public Error {
 public:
  using Error::Error;
};

/// A quotient over the fraction field has an entry outside the polynomial ring.
class NotIntegral : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// A factorization pipeline produced a result that failed exact certification.
class FactorizationIncomplete : public Error {
 public:
  using Error::Error;
};

/// Syntax error in polynomial text; `position()` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace polysse
