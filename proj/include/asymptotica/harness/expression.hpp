#pragma once

#include <memory>
#include <string>
#include <variant>

#include "asymptotica/nonarch/laurent_number.hpp"

namespace asymptotica::harness {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// A numeric literal; `text` is kept for rendering.
struct Literal {
  std::string text;
};
struct Rho {};
struct Binary {
  char op;  // + - * /
  ExprPtr lhs, rhs;
};
struct Power {
  ExprPtr base;
  int exponent;
};
struct Call {
  std::string function;  // sqrt | st | inv
  ExprPtr argument;
};

struct Expr {
  std::variant<Literal, Rho, Binary, Power, Call> node;
};

/// expr := term (('+'|'-') term)*; term := factor (('*'|'/') factor)*;
/// factor := base ('^' int)?; base := number | 'r' | func '(' expr ')' | '(' expr ')'.
/// Throws SyntaxError with the offending position.
ExprPtr parseFieldExpression(const std::string& text);

/// Canonical text with only the parentheses the grammar needs.
std::string renderExpression(const ExprPtr& e);

bool sameTree(const ExprPtr& a, const ExprPtr& b);

nonarch::LaurentNumber evaluate(const ExprPtr& e, const nonarch::FieldContext& ctx);

struct FieldReport {
  std::string value;
  std::string scaleClass;
  std::string standardPart;
};

/// What the REPL prints for one line.
FieldReport evaluateLine(const std::string& text, const nonarch::FieldContext& ctx);

}  // namespace asymptotica::harness
