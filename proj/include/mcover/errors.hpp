#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcover {

/// Thrown by parse_graph; carries the 1-based line that failed.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A caller broke a documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The graph has a vertex no edge can cover (n = 1 or an isolated vertex).
class NoCoverError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal invariant failed. Always a bug, never a user error.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The brute-force oracle refused an instance outside its budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mcover
