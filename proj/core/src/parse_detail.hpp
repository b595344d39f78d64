// Parser fragments shared between the weight and normal-form grammars.

#pragma once

#include "lexer.hpp"
#include "lucas_elliptica/weight_expr.hpp"

namespace lucas_elliptica::detail {

/// Zero or more "w(s,t)[^e]" factors.
WeightMonomial parse_weight_factors(Lexer& lex, bool& any);

/// A signed sum of weight terms, stopping at end of input or ')'.
WeightExpr parse_weight_sum(Lexer& lex);

}  // namespace lucas_elliptica::detail
