#pragma once

#include "dwitt/ring.hpp"

#include <string>

namespace dwitt {

// Canonical text form: ascending graded-lex term order; parse_element of the
// output reproduces the element exactly.
std::string format_element(const RingElement& a);

// Coefficient in the syntax the element grammar accepts in coefficient
// position (sums come back parenthesized by format_element where needed).
std::string format_coefficient(const Coefficient& c);

}  // namespace dwitt
