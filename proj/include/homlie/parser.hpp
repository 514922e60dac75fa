#pragma once

// Element and scalar expressions:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | atom ('^' int)?
//   atom   := integer | 'q' | '[' int ']' | '<' int '>' | sym | '(' expr ')'
//   sym    := ('L' | 'M') '[' int ']' | 'C'
//
// Rationals are written as quotients of integers, e.g. 1/2. Unary minus is
// accepted so that rendered negative coefficients read back.

#include <string>
#include <string_view>
#include <vector>

#include "homlie/basis.hpp"
#include "homlie/cocycle.hpp"

namespace homlie {

struct Expr {
  enum class Kind { Integer, Q, QNumber, Angle, Symbol, Neg, Add, Sub, Mul, Div, Pow };

  Kind kind = Kind::Integer;
  Rational integer;          // Integer
  std::int64_t index = 0;    // QNumber, Angle, Pow exponent
  BasisSym symbol;           // Symbol
  std::vector<Expr> args;    // operands
  int line = 1;
  int column = 1;
};

/// Syntax tree; throws ParseError or UnknownSymbolError.
Expr parse_expr(std::string_view text, int line = 1, int column = 1);

/// Value of an expression: a scalar or an element.
struct ExprValue {
  bool is_scalar = true;
  QScalar scalar;
  Element element;
};

/// Throws ParseError for ill-typed trees and ArithmeticError for division by zero.
ExprValue evaluate(const Expr& e);

/// Zero scalars are accepted as the zero element.
Element parse_element(std::string_view text);
QScalar parse_scalar(std::string_view text);

/// Lines "FAMILY m FAMILY n <scalar-expr>", '#' starts a comment. All
/// entries must share one sector; an empty file is the zero form.
Cocycle parse_cocycle(std::string_view text, std::string name);
Cocycle load_cocycle_file(const std::string& path);

}  // namespace homlie
