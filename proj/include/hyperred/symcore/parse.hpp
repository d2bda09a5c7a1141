#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hyperred/symcore/parameter_expr.hpp"

namespace hyperred {

// Rational expression over identifiers and rational literals with + - * / ^
// (integer exponents) and parentheses. Identifiers listed in `arguments`
// become argument symbols, all others parameters. Throws ParseError.
RationalFunction parse_expression(std::string_view text, const std::set<std::string>& arguments = {},
                                  int line = 1);

// Affine parameter such as "a1+2", "1/2+n/2" or "3".
ParameterExpr parse_parameter(std::string_view text, int line = 1, int column_offset = 0);

// Comma-separated parameter list; an empty or blank string gives an empty list.
std::vector<ParameterExpr> parse_parameter_list(std::string_view text, int line = 1);

}  // namespace hyperred
