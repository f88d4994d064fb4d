#pragma once

#include <string>

#include "stein/catalog.hpp"

namespace stein {

// Grammar:
//   expr     := term (('*' | '/') term)*
//   term     := factor ('^' exponent)?
//   factor   := atom | rational | '(' expr ')' | 'shift(' expr ',' rational ')'
//   atom     := Name '(' rational (',' rational)* ')'
//   exponent := rational | '(' rational ')'
//   rational := '-'? digits ('/' digits)?
//
// A bare rational factor scales the surrounding product; '/' desugars to
// multiplication by the inverse. Atom names are the catalog constructors.
DistExpr parse_expression(const std::string& text);

} // namespace stein
