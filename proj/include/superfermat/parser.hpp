#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "superfermat/superpoly.hpp"
#include "superfermat/weil.hpp"

namespace superfermat {

struct Token {
    enum class Kind { Ident, Number, Op, LParen, RParen, Comma, Semicolon };
    Kind kind;
    std::string lexeme;
    Span span;
};

// Maximal-munch tokenizer. Number tokens cover rational literals, so
// "3/2" is one token while "1/(1+u1)" lexes `/` as an operator.
std::vector<Token> tokenize(std::string_view src);

// Expression AST shared by the polynomial and smooth front ends.
struct ExprNode {
    enum class Kind { Number, Ident, Call, Neg, Add, Sub, Mul, Div, Pow };
    Kind kind;
    Span span;
    Rational number;                  // Number
    std::string name;                 // Ident, Call
    int exponent = 0;                 // Pow
    std::shared_ptr<const ExprNode> lhs, rhs;
};

using ExprPtr = std::shared_ptr<const ExprNode>;

// Parses a full expression (must consume the whole input).
ExprPtr parse_expression(std::string_view src);

// Maps source identifiers to generators. The default scheme is x<k> / xi<k>;
// the Weil CLI front end swaps in t<k> (plus plain `t` when m = 1).
struct GeneratorScheme {
    std::string even_prefix = "x";
    std::string odd_prefix = "xi";
    std::string even_alias;          // extra name for x1, e.g. "t"
    std::string fresh_even_alias;    // extra name for the last even generator, e.g. "y"

    NameScheme names(Signature sig) const;
};

SuperPoly parse_superpoly(std::string_view src, Signature sig,
                          const GeneratorScheme &scheme = {});

// Smooth expressions in variables u1..u<arity>.
SmoothExpr parse_smooth(std::string_view src, int arity);

Signature parse_signature(std::string_view src); // "m,n"

} // namespace superfermat
