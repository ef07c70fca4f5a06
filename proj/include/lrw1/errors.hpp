#pragma once

#include <stdexcept>
#include <string>

namespace lrw1 {

// Base of everything the library throws on bad input or exhausted limits.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input. The CLI maps this to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// A size guard or enumeration cap tripped. The CLI maps this to exit code 3.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

class NotConnected : public InputError {
 public:
  using InputError::InputError;
};

class NotThreadGraph : public InputError {
 public:
  using InputError::InputError;
};

class NotMergeable : public InputError {
 public:
  using InputError::InputError;
};

class NotObnFree : public InputError {
 public:
  using InputError::InputError;
};

class UnknownVertex : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int line, int column)
      : InputError(what + " at line " + std::to_string(line) + ", column " +
                   std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// Raised when a structural claim that the reduction rules guarantee is
// observed to be false. Indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lrw1
