#pragma once

#include <string>

#include "diffmod/ore.hpp"

namespace diffmod {

// Expression grammar shared by the CLI string fields: terms joined by +/-,
// factors by *, powers by ^ with integer exponents, parentheses, rational
// literals like 3/2, whitespace insignificant. The Unicode minus sign is
// accepted as '-'. Symbols: z for rational functions and difference
// operators, T = tau, x and Dx for differential operators.
RatFunc parse_ratfunc(const std::string& text);
DifferenceOperator parse_difference_operator(const std::string& text);
DifferentialOperator parse_differential_operator(const std::string& text);

// True when the expression mentions x or Dx (differential side symbols).
bool mentions_differential_symbols(const std::string& text);
bool mentions_difference_symbols(const std::string& text); // T

} // namespace diffmod
