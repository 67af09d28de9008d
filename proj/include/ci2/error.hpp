#pragma once

#include <stdexcept>
#include <string>

namespace ci2 {

/// Malformed or out-of-domain input. Maps to CLI exit code 1.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Parse failure with a 1-based source position.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : InputError(what + " (line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ")"),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A computation ran past its reduction, degree or enumeration budget.
/// Maps to CLI exit code 2.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ci2
