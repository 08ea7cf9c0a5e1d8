#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rhomboid {

// Base class for every error raised by the library. Callers that only care
// about "something went wrong" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidSizeError : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

class InvalidGraphError : public Error {
 public:
  using Error::Error;
};

class ExpansionOverflowError : public Error {
 public:
  using Error::Error;
};

class AssignmentIncompleteError : public Error {
 public:
  using Error::Error;
};

class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

class NoSplitError : public Error {
 public:
  using Error::Error;
};

class NotBaseCaseError : public Error {
 public:
  using Error::Error;
};

class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace rhomboid
