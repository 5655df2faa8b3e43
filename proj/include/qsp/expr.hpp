#pragma once

// Expression parser for the command-line surface.
//
// Grammar: sums and differences of terms; a term is a chain of factors
// combined by '*', '/', or juxtaposition; '^' takes an integer exponent
// (negative only for scalars and powers of x); atoms are parenthesized
// expressions, integers, parameters (q, p, r, s), and the generators of
// the chosen algebra.  Products preserve written order.

#include <string>

#include "qsp/algebra.hpp"

namespace qsp {

// Which algebra an expression's generator tokens select: dx/dth force the
// calculus, u/w force the form algebra, mixing them is an error, and an
// expression using neither falls back to `preferred`.
AlgebraKind expression_kind(const std::string& src, AlgebraKind preferred);

// Parses against the presentation picked by expression_kind, with the given
// family and bindings, and returns the normal form.  Parameter atoms are
// substituted through `b` so they live in the same quotient as the rules.
// Throws std::invalid_argument with a column number on malformed input.
Element parse_expression(const std::string& src, Family f, const Bindings& b = {},
                         AlgebraKind preferred = AlgebraKind::Gamma);

}  // namespace qsp
