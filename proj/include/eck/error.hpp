#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eck {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violated by the caller (bad argument, pole at base point, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A computed quantity failed an internal consistency audit.
class VerificationError : public Error {
 public:
  using Error::Error;
};

// A truncated computation could not be certified at the available depth.
class TruncationError : public Error {
 public:
  using Error::Error;
};

}  // namespace eck
