#pragma once

#include <memory>
#include <string>

#include "brauer/conic.hpp"

namespace brauer {

// Parse tree for the expression grammar:
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := rational | 'i' | variable | '(' expr ')' | 'sym' '(' entry ',' entry ')'
//   entry  := expr ('/' expr)?
//
// Rational literals cover "p" and "p/q" (no spaces); a '/' elsewhere is the
// entry-level division operator. Variables are u, v and the form
// coordinates S, T, R / X, Y, T.
enum class ExprKind { Num, Imag, VarRef, Add, Sub, Neg, Mul, Div, Pow, Sym };

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    ExprKind kind;
    Rat num;        // Num (nonnegative; signs are Neg/Sub nodes)
    char var = 0;   // VarRef
    Expr lhs, rhs;  // children; Neg/Pow use lhs only
    unsigned exp = 0;  // Pow
};

Expr make_num(const Rat& r);
Expr make_imag();
Expr make_var(char name);
Expr make_binary(ExprKind k, Expr l, Expr r);
Expr make_neg(Expr x);
Expr make_pow(Expr base, unsigned e);
Expr make_sym(Expr a, Expr b);

bool expr_equal(const Expr& a, const Expr& b);

// Canonical printing; reparses to an equal tree.
std::string expr_str(const Expr& e);

// Full-input parse; ParseError carries the offset.
Expr parse_expr(const std::string& text);

// ---- semantic evaluation ---------------------------------------------------

RatFun eval_scalar(const Expr& e);
BrClass eval_class(const Expr& e);
TernaryForm eval_form(const Expr& e);

RatFun parse_scalar(const std::string& text);
BrClass parse_class(const std::string& text);
TernaryForm parse_form(const std::string& text);

// "v=1-u" or "u=g(v)"; the parameter is the surviving coordinate.
ParamCurve parse_curve(const std::string& text);

// "u=0" / "v=1": a coordinate pinned to an exact value.
std::pair<Var, GaussRat> parse_param_point(const std::string& text);

// Exact Q(i) constant from an expression, e.g. "1/2-3*i".
GaussRat parse_gauss(const std::string& text);

} // namespace brauer
