#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bva {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A caller broke a documented precondition (bad id, out-of-range parameter).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace bva
