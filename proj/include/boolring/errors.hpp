#pragma once

#include <stdexcept>
#include <string>

namespace boolring {

/// Thrown when an enumeration or subset-iteration limit would be exceeded.
/// Every exhaustive operation takes an explicit guard so callers can raise
/// or lower it; exceeding the guard fails loudly instead of running for hours.
class guard_error : public std::runtime_error {
public:
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

/// Syntax error in polynomial or DIMACS text, with 1-based position.
class parse_error : public std::runtime_error {
public:
    parse_error(std::string message, unsigned line, unsigned column)
        : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    unsigned line() const { return line_; }
    unsigned column() const { return column_; }

private:
    unsigned line_;
    unsigned column_;
};

}  // namespace boolring
