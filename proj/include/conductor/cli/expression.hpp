#pragma once

#include <map>
#include <string>

#include "conductor/algebra.hpp"

namespace conductor::cli {

// Names visible to an expression besides the uniformizer and the field
// variable.
using Bindings = std::map<std::string, AlgebraElement>;

// Evaluates an expression over `algebra`. Grammar:
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' integer)?
//   atom  := integer | name | '(' expr ')'
// Names are the uniformizer symbol, the coefficient field's variable, and
// `bindings`. Division is only by units of O_K. Throws ValidationError with
// an empty path on malformed input.
AlgebraElement evaluate(const std::string& text, const FiniteFlatAlgebra& algebra, const Bindings& bindings = {});

// An expression with no generators, as an element of O_K.
Series evaluate_scalar(const std::string& text, const BaseDVR& base);

}  // namespace conductor::cli
