#pragma once

#include <stdexcept>
#include <string>

namespace polyaut {

/// Exact polynomial division was requested but the divisor does not divide
/// the dividend. In the determinant pipeline this indicates a bug, not bad
/// input, hence logic_error.
class InexactDivision : public std::logic_error {
public:
    explicit InexactDivision(const std::string& what) : std::logic_error(what) {}
};

/// The second-order derivation table failed the delta_k(delta_i x_j) ==
/// delta_i(delta_k x_j) cross-check.
class CommutativityViolation : public std::logic_error {
public:
    explicit CommutativityViolation(const std::string& what) : std::logic_error(what) {}
};

/// A Groebner computation ran past its step budget or wall-clock deadline.
class BudgetExceeded : public std::runtime_error {
public:
    enum class Reason { steps, deadline };

    BudgetExceeded(Reason reason, const std::string& what)
        : std::runtime_error(what), reason_(reason) {}

    Reason reason() const { return reason_; }

private:
    Reason reason_;
};

/// Syntax error while parsing polynomial or map text; carries 1-based
/// line/column of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column)
        : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace polyaut
