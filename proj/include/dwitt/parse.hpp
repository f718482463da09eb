#pragma once

#include "dwitt/ring.hpp"

#include <string_view>

namespace dwitt {

// Grammar (whitespace-insensitive):
//   element     := ('+'|'-')? term (('+'|'-') term)*
//   term        := factor (('*'|'/') factor)*     -- '/' needs a divisor
//                                                    constant in the ring vars
//   factor      := coefficient | var ('^' int)? | '(' element ')'
//   coefficient := int ('/' posint)? | param ('^' int)? | 'zeta(' posint ')' ('^' int)?
//   int         := '-'? digits
// Errors carry the byte offset of the offending token.
RingElement parse_element(std::string_view text, const RingPtr& ring);

}  // namespace dwitt
