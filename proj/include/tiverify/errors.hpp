#pragma once

#include <stdexcept>
#include <string>

namespace tiv {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction exceeded a configured size cap ("group too large",
/// "lattice too large"). Callers that sweep many groups treat this as
/// "skip", not "fail".
class CapError : public Error {
 public:
  using Error::Error;
};

/// Malformed input in the line-oriented group file format.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace tiv
