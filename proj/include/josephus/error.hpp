#pragma once

#include <stdexcept>
#include <string>

namespace josephus {

// Domain errors. The CLI maps InvalidInput to exit code 2 and every other
// Error to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Raised when an exhaustive enumeration or a diagram would exceed its cap.
class ResourceGuard : public Error {
 public:
  using Error::Error;
};

class ClosureError : public Error {
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

class TangleError : public Error {
 public:
  using Error::Error;
};

}  // namespace josephus
