/// @file parser.hpp
/// @brief Exact recursive-descent parser for polynomial expressions.
///
/// Grammar (whitespace insignificant):
///   expr     := ['-'] term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := ['-'] base ('^' nat)*
///   base     := rational | variable | '(' expr ')'
///   rational := nat ('/' nat)?
///
/// There is no implicit multiplication ("x y" and "2x" are errors that
/// demand '*'), '/' joins integer literals only, and '^' takes nonnegative
/// integer exponents.  Identifiers must be declared ring variables.  Every
/// error is an InputError carrying line:column and the offending lexeme.

#pragma once

#include "logres/ring.hpp"

#include <string>

namespace logres {

/// Parse `text` into a polynomial over R.  Throws InputError with
/// "line L, column C" positions on any lexical or syntactic fault.
Polynomial parse_polynomial(const std::string& text, const RingPtr& R);

} // namespace logres
