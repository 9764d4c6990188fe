#pragma once

#include "dimcheck/ast.hpp"
#include "dimcheck/dimension.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dimcheck {

/// Function symbol signature. Transcendental functions (exp, log, ...) take
/// dimensionless arguments and yield a dimensionless result; declared
/// functions carry explicit argument and result dimensions.
struct FuncSig {
    std::string name;
    bool transcendental = false;
    std::size_t arity = 1;
    std::vector<Dimension> arg_dims;  // empty for transcendental
    std::optional<Dimension> result_dim;  // nullopt for transcendental (reads as 1)
};

struct VarDecl {
    std::string name;
    std::optional<Dimension> dim;  // nullopt marks an `infer` declaration
    Span span;
};

struct ParamDecl {
    std::string name;
    Dimension dim;
    std::optional<Rational> binding;  // numeric value, when given
    Span span;
};

struct Equation {
    std::string name;
    Expr lhs;
    Expr rhs;
    Span span;  // whole declaration line
};

/// Parsed model file: the base-dimension system, variable/parameter/function
/// declarations and named equations, in declaration order.
struct ModelSpec {
    SystemPtr system;
    std::vector<VarDecl> vars;
    std::vector<ParamDecl> params;
    std::vector<FuncSig> funcs;
    std::vector<Equation> equations;
    std::vector<std::string> source_lines;  // kept for diagnostics rendering

    const VarDecl* find_var(std::string_view name) const;
    const ParamDecl* find_param(std::string_view name) const;
    const FuncSig* find_func(std::string_view name) const;
    bool declared(std::string_view name) const;
};

}  // namespace dimcheck
