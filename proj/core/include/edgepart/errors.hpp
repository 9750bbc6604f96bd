#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edgepart {

/// Malformed instance text. The message always carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line), detail_(what) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

/// A caller broke a documented precondition (e.g. chromosome length mismatch).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exhaustive enumeration refused because it would exceed its budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace edgepart
