#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "polyaut/polynomial.hpp"

namespace polyaut {

/// Canonical text form: terms in descending grevlex order, explicit `*`
/// between factors, `^` for exponents >= 2, coefficients as `a` or `a/b`.
/// Example: "4*x2*x3^4 - 2*x3^3". Output re-parses to an equal polynomial.
std::string to_string(const Polynomial& p, std::string_view variable_prefix = "x");

/// Parses the polynomial grammar: variables `x1..xN` (or `X`), integer and
/// `a/b` literals, `+ - * ^`, parentheses. Implicit multiplication is a
/// syntax error. Positions in ParseError are 1-based; `line` / `column_base`
/// anchor them when the text is embedded in a larger document.
Polynomial parse_polynomial(std::string_view text, int arity, int line = 1, int column_base = 0);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace polyaut
