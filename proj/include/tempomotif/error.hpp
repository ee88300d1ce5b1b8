#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tempomotif {

// Base for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input data: malformed files, self-loops, ordering violations.
class DataError : public Error {
 public:
  using Error::Error;
};

class ParseError : public DataError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class OrderingError : public DataError {
 public:
  using DataError::DataError;
};

// Invalid parameters supplied by the caller.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class UnsupportedMotif : public Error {
 public:
  using Error::Error;
};

// naive_enumerate refused because the input exceeds its configured limits.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace tempomotif
