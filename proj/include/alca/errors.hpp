#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alca {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed machine/time-set content (undeclared names, out-of-range values).
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Syntactically broken input document.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A word mentions a symbol outside the machine's alphabet.
class SymbolError : public Error {
 public:
  using Error::Error;
};

// Two machines compared over different alphabets.
class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

// Product exploration exceeded the configured node budget.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace alca
