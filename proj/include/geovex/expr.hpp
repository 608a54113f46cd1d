#pragma once

#include <span>
#include <string>

#include "geovex/errors.hpp"
#include "geovex/guard.hpp"

namespace geovex {

/// Parses an arithmetic expression over the named variables into a Poly.
/// Literals are exact rationals ("3", "3/4"); operators are + - * / ^ with
/// parentheses, where the divisor must be a nonzero constant and exponents
/// are nonnegative integer literals. Variable slot = index in `var_names`.
/// Throws ConfigError with a column position on malformed input.
Poly parse_poly_expr(const std::string& text, std::span<const std::string> var_names);

/// Parses a guard formula: comparisons chained with && and || (conjunction
/// binds tighter), parentheses allowed. The result is normalized to DNF.
Guard parse_guard_expr(const std::string& text, std::span<const std::string> var_names);

}  // namespace geovex
