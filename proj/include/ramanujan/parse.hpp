#pragma once

#include "ramanujan/ratfunc.hpp"

#include <string_view>

namespace ramanujan {

// Parses arithmetic expressions over integers and named variables into exact
// rational functions: + - * / ^ ( ), with '^' binding tightest (integer
// exponent, negative allowed on nonzero bases) and unary minus.  This is the
// inverse of the canonical str() forms of MultiPoly / RatFunc.
// Throws std::invalid_argument on malformed input.
RatFunc parse_ratfunc(std::string_view src);

// Same, but requires the result to be a polynomial (constant denominator).
MultiPoly parse_poly(std::string_view src);

} // namespace ramanujan
