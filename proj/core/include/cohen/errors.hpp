#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cohen {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A truncated series is too short for the requested derivative or monomial.
class OrderError : public Error {
 public:
  using Error::Error;
};

/// Unknown kernel name, malformed kernel data, or an unsupported kernel request.
class KernelError : public Error {
 public:
  using Error::Error;
};

/// Invalid algebraic operation (e.g. inverting zero, adding across gradings).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Grid construction or numeric accuracy failure.
class NumericError : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind {
  lexical,
  unbalanced_parentheses,
  unexpected_token,
  non_integer_exponent,
  negative_exponent,
  operator_in_phase_mode,
  phase_variable_in_operator_mode,
};

/// Expression parse failure, carrying the byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t offset, const std::string& what)
      : Error(what + " at offset " + std::to_string(offset)),
        kind_(kind),
        offset_(offset) {}

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  ParseErrorKind kind_;
  std::size_t offset_;
};

}  // namespace cohen
