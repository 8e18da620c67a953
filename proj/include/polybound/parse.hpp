#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polybound/mpoly.hpp"

namespace polybound {

/// Expression tree for polynomial input. Sums and products are n-ary;
/// exponents are validated non-negative integers at parse time (anything else
/// is rejected as NonPolynomial), and literals are exact rationals: integer,
/// fraction, or decimal converted without rounding. Division survives only as
/// multiplication by the reciprocal of a constant divisor.
struct ExprAST {
    enum class Kind { Sum, Product, Power, Negate, Variable, Literal };
    Kind kind = Kind::Literal;
    std::vector<ExprAST> kids; // Sum/Product: 2+, Power/Negate: exactly 1
    int exponent = 0;          // Power only
    std::string name;          // Variable only
    Rat value;                 // Literal only
    std::size_t pos = 0;       // 1-based position in the source text
};

/// Text to expression tree. Throws SyntaxError (with 1-based position) for
/// malformed input and NonPolynomial for division by a variable expression or
/// a fractional/negative exponent.
ExprAST parse_expr(const std::string& text);

/// Text to polynomial. Without a declaration, variables are registered in
/// first-appearance order; a declared list pins the order (which determines
/// the distinguished last variable) and any undeclared name in the text is a
/// SyntaxError at its position.
QPoly parse_poly(const std::string& text,
                 const std::optional<std::vector<std::string>>& vars = std::nullopt);

/// Exact rational from a single literal: "7", "-3/4", or "2.125". Used for
/// point coordinates on the command line. Throws SyntaxError.
Rat parse_rat(const std::string& text);

} // namespace polybound
