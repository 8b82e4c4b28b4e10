#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace probelag {

// Base of all data-level failures. The CLI maps these to exit code 1;
// configuration problems are reported separately and exit with code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyInputError : public Error {
 public:
  using Error::Error;
};

class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

class InsufficientOverlapError : public Error {
 public:
  using Error::Error;
};

class WindowTooShortError : public Error {
 public:
  using Error::Error;
};

class DegenerateSampleError : public Error {
 public:
  using Error::Error;
};

class OverlapError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

class DuplicateRowError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace probelag
