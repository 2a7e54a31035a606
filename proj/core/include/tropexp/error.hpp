#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropexp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input. Carries the byte offset when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  explicit ParseError(const std::string& what) : Error(what), position_(npos) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operation was called outside its domain (dimension mismatch, degree
/// mismatch, division by zero, non-spanning support, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Scalars from two different quadratic fields were combined.
class FieldMismatchError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A seeded random choice could not be certified generic after the retry budget.
class GenericityError : public Error {
 public:
  using Error::Error;
};

}  // namespace tropexp
