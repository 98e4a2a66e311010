#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pinosp/suites.hpp"

namespace pinosp {

/// Syntax or evaluation error at a 1-based line and column.
class ExprError : public ParseError {
 public:
  ExprError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_, column_;
  std::string message_;
};

struct Expr {
  enum class Kind { number, name, call, add, sub, mul, div, pow, neg, bracket, anti };
  Kind kind = Kind::number;
  std::string text;  // number literal, identifier or callee
  std::vector<std::unique_ptr<Expr>> args;
  int line = 1, column = 1;
};
using ExprPtr = std::unique_ptr<Expr>;

/// Grammar (lowest to highest precedence):
///   sum    := prod (('+' | '-') prod)*
///   prod   := unary (('*' | '/') unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' integer)?
///   atom   := number | name | name '(' sum (',' sum)* ')' | '(' sum ')'
///           | '[' sum ',' sum ']' | '{' sum ',' sum '}'
ExprPtr parse_expr(const std::string& src);

/// Fully parenthesized rendering of the tree.
std::string print_expr(const Expr& e);

/// Evaluates in A_kappa. Names:
///   x<p> y<p> covector / vector basis (elements when used as values)
///   e<p> Clifford generators, s<k> reflections, g<index> group elements
///   i sqrt2 k<c> scalars; X D H Ep Em Fp Fm Casimir Scasimir OmegaKappa Omega Otop
///   zp<j> zm<j> z0 Witt covectors, alpha<k> root of reflection k
/// Calls: O(u..) M(u,v) A(u..) gamma(u) beta(u) Pp Pm Palpha Qp Qm (a) R(u) rho(k).
Element eval_expr(const Expr& e, const Workspace& ws);
Element eval_expr(const std::string& src, const Workspace& ws);

}  // namespace pinosp
