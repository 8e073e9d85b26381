#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ddc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPosition : public Error {
 public:
  using Error::Error;
};

/// A caller violated an operation's precondition (wrong peak kind,
/// non-matching redex pattern, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedPeak : public Error {
 public:
  using Error::Error;
};

class ResourceExhausted : public Error {
 public:
  using Error::Error;
};

class ArityClash : public Error {
 public:
  using Error::Error;
};

class UninterpretedSymbol : public Error {
 public:
  using Error::Error;
};

class InvalidInterpretation : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a textual input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Certificate does not conform to the JSON schema. `path` is a JSON
/// pointer-like location such as `/peaks/2/left/conv1/0/to`.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& what, std::string path)
      : Error(path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace ddc
