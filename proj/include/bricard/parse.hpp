#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "bricard/rational_expression.hpp"
#include "bricard/table.hpp"

namespace bricard {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

/// Grammar: identifiers, integer literals, + - * / ^ ( ).
/// Precedence ^ > unary - > * / > + -; ^ is right-associative with a
/// non-negative integer exponent.
RationalExpression parse_rational(const std::string& text, const UniversePtr& u);

/// Like parse_rational but the result must be a polynomial: division is
/// only accepted when it cancels exactly (e.g. rational constants).
Polynomial parse_polynomial(const std::string& text, const UniversePtr& u);

/// One relation per line, `target = expr` or `target^n = expr`; `#` starts a
/// comment; a blank line ends a table.  Rejects repeated targets and a
/// target appearing on its own rhs.
SolutionTable parse_table(const std::string& text, const UniversePtr& u);

/// All blank-line-separated tables in a multi-table file.
std::vector<SolutionTable> parse_tables(const std::string& text, const UniversePtr& u);

/// Side file: `name = value` with rational values, one per line; `#`
/// comments; symbolic sides are simply absent.
std::map<std::string, Q> parse_sides(const std::string& text);

}  // namespace bricard
