#pragma once
// Text encoding of polynomials. Canonical output lists terms in grlex order
// as "(re,im) z1^a z2^b" joined by " + ", e.g. "(1,0) z1^2 + (-1/2,1) z2^1";
// the zero polynomial is "0". The parser also accepts ordinary shorthand:
// "z1^2 - 1/2*z2", "(1,1) z1 z2", "3i z1", "(z1 + z2)^2".

#include <string>
#include <string_view>

#include "pluri/holo_poly.hpp"

namespace pluri {

std::string to_text(const HoloPoly& p);

// Throws Error(Parse) with the character offset of the problem.
HoloPoly parse_poly(std::string_view text, int num_vars);

}  // namespace pluri
