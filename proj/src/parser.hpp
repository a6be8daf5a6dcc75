#pragma once

#include <string>

#include "poly.hpp"

namespace lndkit {

// Parses the canonical textual polynomial syntax:
//   expr   := '-'? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := rational | 'x' | 'y' | '(' expr ')'
// with rationals written p/q or as integers, whitespace ignored
// between tokens. Throws ParseError carrying a 0-based byte offset.
Poly parse_poly(const std::string& text);

}  // namespace lndkit
