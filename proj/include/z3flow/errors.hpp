#pragma once

#include <stdexcept>
#include <string>

namespace z3flow {

// Input violates an operation's precondition (bad vertex set, inconsistent
// imbalance target, malformed wheel, ...). Distinct from a negative answer.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The request is well formed but outside the range the exact algorithms
// accept (vertex or edge count above a documented cap).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unknown catalog name or lemma id.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// The input would produce a graph outside the data model (a loop).
class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column = 0)
      : std::runtime_error(format(message, line, column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& message, int line, int column) {
    if (line <= 0) return message;
    std::string where = "line " + std::to_string(line);
    if (column > 0) where += ", column " + std::to_string(column);
    return where + ": " + message;
  }

  int line_;
  int column_;
};

}  // namespace z3flow
