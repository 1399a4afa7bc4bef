#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcan {

// Raised by the KB and query parsers. Positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A query handed to an operation that only accepts a sub-fragment
// (for example base() on a query containing UNION).
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsatisfiableKbError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mcan
