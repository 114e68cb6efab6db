#pragma once

#include <biham/poly.hpp>
#include <biham/ratfunc.hpp>

#include <string_view>

namespace biham {

// Grammar: integers, p/q, identifiers, + - * / ^ and parentheses; whitespace is ignored.
// Identifiers must belong to the ring; errors carry the column of the offending token.
RationalFunction parse_expression(std::string_view text, const Ring& ring);

// As parse_expression, rejecting results with a non-constant denominator.
Poly parse_poly(std::string_view text, const Ring& ring);

}  // namespace biham
