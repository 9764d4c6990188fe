#pragma once

// Independent numeric oracles the tests check the implementation against.
// None of these share code with the paths they verify.

#include "dimcheck/ast.hpp"
#include "dimcheck/growth.hpp"
#include "dimcheck/quantity.hpp"

#include <cmath>
#include <map>
#include <string>

namespace testsupport {

// Steady-state capital by bisection on the marginal-product condition
// a0*alpha*k^(alpha-1) = rho + n + delta over (1e-9, 1e9).
inline double bisect_steady_k(const dimcheck::growth::Params& p) {
    auto g = [&](double k) {
        return p.a0 * p.alpha * std::pow(k, p.alpha - 1.0) - (p.rho + p.n + p.delta);
    };
    double lo = 1e-9;
    double hi = 1e9;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (g(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Central-difference Jacobian of the (kdot, cdot) field.
inline dimcheck::growth::Jacobian fd_jacobian(const dimcheck::growth::State& s,
                                              const dimcheck::growth::Params& p,
                                              double h = 1e-6) {
    using dimcheck::growth::rhs;
    using dimcheck::growth::State;
    auto dk = rhs(State{s.k + h, s.c}, p);
    auto dk2 = rhs(State{s.k - h, s.c}, p);
    auto dc = rhs(State{s.k, s.c + h}, p);
    auto dc2 = rhs(State{s.k, s.c - h}, p);
    dimcheck::growth::Jacobian j;
    j.dk_dk = (dk.kdot - dk2.kdot) / (2.0 * h);
    j.dc_dk = (dk.cdot - dk2.cdot) / (2.0 * h);
    j.dk_dc = (dc.kdot - dc2.kdot) / (2.0 * h);
    j.dc_dc = (dc.cdot - dc2.cdot) / (2.0 * h);
    return j;
}

// Evaluates an algebraic expression (no der/integ/call) under
// dimensioned-quantity arithmetic. Fails with NonEquidimensionalError on
// exactly the expressions the checker flags.
inline dimcheck::Quantity eval_quantities(const dimcheck::Expr& e,
                                          const std::map<std::string, dimcheck::Quantity>& vars) {
    using dimcheck::Expr;
    using dimcheck::ExprKind;
    using dimcheck::Quantity;
    switch (e.kind) {
        case ExprKind::Num:
            return {e.number, dimcheck::Dimension::one(vars.begin()->second.dim().system())};
        case ExprKind::Var:
            return vars.at(e.name);
        case ExprKind::Add: {
            Quantity acc = eval_quantities(e.children[0], vars);
            for (std::size_t i = 1; i < e.children.size(); ++i) {
                acc = acc + eval_quantities(e.children[i], vars);
            }
            return acc;
        }
        case ExprKind::Sub:
            return eval_quantities(e.children[0], vars) - eval_quantities(e.children[1], vars);
        case ExprKind::Mul: {
            Quantity acc = eval_quantities(e.children[0], vars);
            for (std::size_t i = 1; i < e.children.size(); ++i) {
                acc = acc * eval_quantities(e.children[i], vars);
            }
            return acc;
        }
        case ExprKind::Div:
            return eval_quantities(e.children[0], vars) / eval_quantities(e.children[1], vars);
        case ExprKind::Neg: {
            Quantity q = eval_quantities(e.children[0], vars);
            return {-q.value(), q.dim()};
        }
        case ExprKind::Pow:
            return dimcheck::pow(eval_quantities(e.children[0], vars), e.exponent.value);
        default:
            throw std::logic_error("eval_quantities: unsupported node");
    }
}

}  // namespace testsupport
