#pragma once

#include <string_view>

#include "leafcalc/ratfunc.hpp"

namespace leafcalc {

/// Parses expressions such as "y3 - 2*x1*y1^2" or "(1 + y1)/(x1^2 + 1)".
/// Grammar: sums and differences of products/quotients of powers; atoms are
/// integers, variables x1..x{2s} and y1..yn, and parenthesized expressions.
/// Exponents are non-negative integers. Errors carry the 1-based column.
RatFunc parse_ratfunc(const ChartSpec& chart, std::string_view text);

/// As parse_ratfunc, but the result must be a polynomial.
Poly parse_poly(const ChartSpec& chart, std::string_view text);

}  // namespace leafcalc
