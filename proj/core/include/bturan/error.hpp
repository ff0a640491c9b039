#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bturan {

/// Raised when an argument violates a documented precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by text parsers; carries the 1-based line of the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Raised when a configured cap (enumeration size, vertex count) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by registry lookups whose (pattern, host) pair violates the standing assumptions.
class InfeasibleQuery : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bturan
