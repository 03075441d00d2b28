#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specmine {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (trace corpus, model JSON). `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A caller-supplied parameter outside its documented range.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace specmine
