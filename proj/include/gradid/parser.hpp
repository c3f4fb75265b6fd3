#pragma once

// Text grammar for polynomials (whitespace-insensitive):
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (['*'] factor)*          juxtaposition multiplies
//   factor  := atom ['^' (INT | '(' INT ')')]
//   atom    := INT | '{' INT (',' INT)* '}' | y<k> | z<k> | '(' expr ')'
//            | '[' arg (',' arg)+ ']'          left-normed commutator
//   arg     := atom '^(' INT ')'               powered step [f, g^(r)]
//            | expr
//
// Integer coefficients are reduced into the prime subfield. A bare scalar is
// only allowed as a factor of a term that also contains a variable.

#include <string_view>

#include "gradid/polynomial.hpp"

namespace gradid {

/// Throws ParseError with the byte offset of the problem.
Polynomial parse_polynomial(std::string_view text, const FieldPtr& field);

}  // namespace gradid
