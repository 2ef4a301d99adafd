#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mlcf {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed literal or data file; `position` is a 0-based character offset
// (or line number for file formats).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at " + std::to_string(position) + ")"), message_(what), position_(position) {}
  std::size_t position() const { return position_; }
  // The message without the position suffix.
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

// An operation was asked for something its preconditions exclude.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A search exceeded its memory or size budget.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::size_t reached)
      : Error(what + " (reached " + std::to_string(reached) + ")"), reached_(reached) {}
  std::size_t reached() const { return reached_; }

 private:
  std::size_t reached_;
};

// A certified inequality that was expected to hold does not.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace mlcf
