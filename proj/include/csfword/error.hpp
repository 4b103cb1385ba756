#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace csfword {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed word or graph text. `position` is a character offset (or a line
/// number for line-oriented formats, see `line()`).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position, std::size_t line = 0)
      : Error(what), position_(position), line_(line) {}

  std::size_t position() const noexcept { return position_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t position_;
  std::size_t line_;
};

/// A caller violated an operation's precondition (unknown letter, x == y,
/// non-uniform word where a uniform one is required, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Input is larger than a configured brute-force bound.
class BoundsError : public Error {
 public:
  using Error::Error;
};

/// A constructed word failed its post-validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace csfword
