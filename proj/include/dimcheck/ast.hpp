#pragma once

#include "dimcheck/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dimcheck {

/// Source range within one line; line and columns are 1-based, col_end is
/// exclusive.
struct Span {
    int line = 0;
    int col_start = 0;
    int col_end = 0;

    friend bool operator==(const Span&, const Span&) = default;
};

enum class ExprKind { Num, Var, Add, Sub, Mul, Div, Pow, Neg, Der, Integ, Call };

/// Exponent of a Pow node: either a rational literal or the name of a
/// declared dimensionless parameter whose binding supplies the value.
struct PowExponent {
    bool is_param = false;
    Rational value;
    std::string param;

    static PowExponent literal(Rational r) { return {false, r, {}}; }
    static PowExponent parameter(std::string name) { return {true, Rational(0), std::move(name)}; }
};

/// Equation AST node, value-semantic. Add and Mul are n-ary (>= 2 children),
/// Sub and Div binary, Neg/Der/Integ unary; Pow stores its base as the single
/// child and the exponent separately.
struct Expr {
    ExprKind kind = ExprKind::Num;
    Span span;
    double number = 0.0;         // Num
    std::string name;            // Var name or Call function name
    std::vector<Expr> children;
    PowExponent exponent;        // Pow

    static Expr num(double v);
    static Expr var(std::string name);
    static Expr add(std::vector<Expr> terms);
    static Expr sub(Expr a, Expr b);
    static Expr mul(std::vector<Expr> factors);
    static Expr div(Expr a, Expr b);
    static Expr pow(Expr base, PowExponent e);
    static Expr neg(Expr a);
    static Expr der(Expr a);
    static Expr integ(Expr a);
    static Expr call(std::string fname, std::vector<Expr> args);
};

/// Structural equality; spans are ignored.
bool structurally_equal(const Expr& a, const Expr& b);

/// Canonical text that re-parses to a structurally equal tree.
std::string format_expr(const Expr& e);

}  // namespace dimcheck
