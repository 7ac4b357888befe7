#pragma once

#include <stdexcept>
#include <string>

namespace cycleflow {

// Base class for every error this library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain contract of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed input text. Line numbers are 1-based and refer to the original
// text including comments and blank lines.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Operation is not defined for the given instance, e.g. a constructive
// dominance witness for three or more commodities.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace cycleflow
