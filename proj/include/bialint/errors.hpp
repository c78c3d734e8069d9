#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bialint {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text or data that does not follow the expected format.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// Arithmetic outside the domain of an operation (division by zero, q = 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A rewrite system whose rules are not oriented by the monomial order, or a
/// reduction that exceeded its step guard.
class NonTermination : public Error {
 public:
  using Error::Error;
};

/// Bounded completion produced more rules than its guard allows.
class CompletionOverflow : public Error {
 public:
  using Error::Error;
};

/// A computation needed a tensor pair outside the truncation window.
class WindowOverflow : public Error {
 public:
  using Error::Error;
};

/// A size or step limit was hit before the computation finished.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Input data that parses but violates a mathematical requirement.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A function was called on data that does not meet its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The requested mode is not available for this input.
class UnsupportedMode : public Error {
 public:
  using Error::Error;
};

/// A library invariant failed; this is a bug, not a user error.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a presentation file, tagged with a 1-based line number.
class ParseError : public MalformedInput {
 public:
  ParseError(std::size_t line, const std::string& message)
      : MalformedInput("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace bialint
