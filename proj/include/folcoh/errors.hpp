#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace folcoh {

/// Base class for everything this library throws on bad input.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A named validation failure (exit status 1 at the CLI).
/// `kind` is a stable machine-checkable tag, e.g. "JacobiViolation".
class ValidationError : public Error {
public:
  ValidationError(std::string kind, const std::string& msg)
      : Error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

/// Text-format failure carrying the 1-based input line (exit status 2 at the CLI).
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

} // namespace folcoh
