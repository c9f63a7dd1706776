#pragma once

// Text form of Laurent polynomials.
//
// Term grammar (whitespace ignored): an optionally signed sum of terms `c`,
// `t`, `t^k`, `c*t^k` or `ct^k`, with k possibly negative, e.g.
// "1+7t-15t^2+7t^3+t^4" or "-t^-1 + 3 - t". Repeated exponents add up.
// Vector form: "[c0,c1,...]@low" where c_i multiplies t^(low+i); "@low" may be
// omitted for low = 0.

#include <string>
#include <string_view>

#include "knotconc/polyarith.hpp"

namespace knotconc {

/// Parses and normalizes. Throws ParseError with the byte offset of the
/// offending character.
LaurentPoly parse_poly(std::string_view text);

/// Term form in increasing exponent order, e.g. "1+7t-15t^2+7t^3+t^4"; "0" for zero.
std::string render_poly(const LaurentPoly& p);

}  // namespace knotconc
