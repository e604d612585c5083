#pragma once

// Expression language over the variable q. `*` is always the *-product.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' '-'? integer)?
//   primary := number ('i'|'j'|'k')? | 'i' | 'j' | 'k' | 'q'
//            | ('conj'|'sym'|'inv'|'neg') '(' expr ')' | '(' expr ')'
//
// A parenthesized group holding a quaternion in text form, such as
// "(1-2i+0.5k)", is read as one literal.

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "sliceq/rational.hpp"

namespace sliceq {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Literal, Variable, Neg, Conj, Sym, Inv, Add, Sub, Mul, Pow };

  Kind kind = Kind::Literal;
  Quaternion value;  // Literal
  int exponent = 0;  // Pow
  ExprPtr lhs;       // operand of unary nodes and Pow
  ExprPtr rhs;

  static ExprPtr literal(const Quaternion& v);
  static ExprPtr variable();
  static ExprPtr unary(Kind kind, ExprPtr operand);
  static ExprPtr binary(Kind kind, ExprPtr a, ExprPtr b);
  static ExprPtr power(ExprPtr base, int exponent);
};

/// Structural equality.
bool equal(const Expr& a, const Expr& b);

/// Throws SyntaxError with the byte offset of the offending input.
ExprPtr parse_expr(std::string_view text);

/// Fully parenthesized form that parses back to an equal tree.
std::string print(const Expr& e);

using Value = std::variant<QPolynomial, QRational>;

/// Evaluates the tree in the polynomial ring, moving to rationals only at
/// `inv` and negative exponents.
Value lower(const Expr& e);

QRational as_rational(const Value& v);
Quaternion eval(const Value& v, const Quaternion& q);

}  // namespace sliceq
