#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pfeq/ratfunc.hpp"

namespace pfeq {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

// Abstract syntax for the expression front-end: arbitrary-precision integers,
// identifiers, sqrt(...) atoms, + - * / and ^ with integer exponents.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Integer, Variable, Sqrt, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind;
  Int value;                  // Integer payload; for Pow, the exponent
  std::string name;           // Variable payload
  std::vector<ExprPtr> args;  // operands
};

ExprPtr parse_expr(const std::string& text);

// Identifier canonicalization: UTF-8 lambda -> "l", zeta -> "z".
std::string canonical_var(const std::string& name);

// Evaluations. Unknown identifiers and misplaced sqrt raise ParseError with
// position 0 (the expression is already out of the lexer's hands).
RatFunc expr_to_ratfunc(const ExprPtr& e, const std::string& var);
Rational expr_to_rational(const ExprPtr& e);
QuadExt expr_to_quadext(const ExprPtr& e);

// Convenience: parse + evaluate.
RatFunc parse_ratfunc(const std::string& text, const std::string& var);
Rational parse_rational(const std::string& text);
QuadExt parse_quadext(const std::string& text);

// Printing. Plain style matches the parser grammar: integer-normalized
// numerator/denominator, ascending powers, '*' and '^' explicit.
std::string poly_str(const Poly& p, const std::string& var);
std::string ratfunc_str(const RatFunc& f, const std::string& var);
std::string ratfunc_latex(const RatFunc& f, const std::string& var);

// Clear rational coefficients: f = n/d with integer-coefficient n, d of content
// gcd 1 and positive leading denominator coefficient.
void integer_normalized(const RatFunc& f, Poly& n, Poly& d);

}  // namespace pfeq
