#include "dimcheck/checker.hpp"

#include <algorithm>

namespace dimcheck {

std::string_view rule_name(ViolationRule rule) {
    switch (rule) {
        case ViolationRule::AdditionMismatch: return "AdditionMismatch";
        case ViolationRule::EqualityMismatch: return "EqualityMismatch";
        case ViolationRule::TranscendentalArgNotDimensionless:
            return "TranscendentalArgNotDimensionless";
        case ViolationRule::ExponentNotDimensionless: return "ExponentNotDimensionless";
        case ViolationRule::FunctionArgMismatch: return "FunctionArgMismatch";
    }
    return "?";
}

Env Env::from_model(const ModelSpec& spec,
                    const std::vector<std::pair<std::string, Dimension>>& inferred) {
    Env env(spec.system);
    for (const auto& v : spec.vars) {
        if (v.dim) env.bind(v.name, *v.dim);
    }
    for (const auto& [name, dim] : inferred) env.bind(name, dim);
    for (const auto& p : spec.params) env.bind_param(p.name, p.dim, p.binding);
    for (const auto& f : spec.funcs) env.add_func(f);
    return env;
}

void Env::bind(std::string name, Dimension dim) { dims_.insert_or_assign(std::move(name), std::move(dim)); }

void Env::bind_param(std::string name, Dimension dim, std::optional<Rational> value) {
    if (value) bindings_.insert_or_assign(name, *value);
    dims_.insert_or_assign(std::move(name), std::move(dim));
}

void Env::add_func(FuncSig sig) { funcs_.insert_or_assign(sig.name, std::move(sig)); }

const Dimension* Env::lookup(std::string_view name) const {
    auto it = dims_.find(name);
    return it == dims_.end() ? nullptr : &it->second;
}

const FuncSig* Env::lookup_func(std::string_view name) const {
    auto it = funcs_.find(name);
    return it == funcs_.end() ? nullptr : &it->second;
}

std::optional<Rational> Env::param_binding(std::string_view name) const {
    auto it = bindings_.find(name);
    if (it == bindings_.end()) return std::nullopt;
    return it->second;
}

Dimension Env::time() const {
    if (!has_time()) throw MissingTimeDimensionError();
    return Dimension::base(sys_, "T");
}

namespace {

// Every additive term reachable through Add/Sub/Neg spines; signs are
// irrelevant to dimensions.
void flatten_additive(const Expr& e, std::vector<const Expr*>& out) {
    switch (e.kind) {
        case ExprKind::Add:
        case ExprKind::Sub:
            for (const Expr& c : e.children) flatten_additive(c, out);
            return;
        case ExprKind::Neg:
            flatten_additive(e.children[0], out);
            return;
        default:
            out.push_back(&e);
    }
}

// Consensus dimension of a group of equidimensional-by-contract terms: the
// most frequent dimension, earliest first occurrence breaking ties. Minority
// members are the ones blamed.
std::size_t consensus_index(const std::vector<Dimension>& dims) {
    std::size_t best = 0;
    std::size_t best_count = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        bool seen = false;
        for (std::size_t j = 0; j < i; ++j) {
            if (dims[j] == dims[i]) {
                seen = true;
                break;
            }
        }
        if (seen) continue;
        std::size_t count = 0;
        for (const auto& d : dims) {
            if (d == dims[i]) ++count;
        }
        if (count > best_count) {
            best = i;
            best_count = count;
        }
    }
    return best;
}

class Inference {
public:
    Inference(const Env& env, std::vector<Violation>* sink, std::string equation)
        : env_(env), sink_(sink), equation_(std::move(equation)) {}

    Dimension infer(const Expr& e) {
        switch (e.kind) {
            case ExprKind::Num:
                return Dimension::one(env_.system());
            case ExprKind::Var: {
                const Dimension* d = env_.lookup(e.name);
                if (!d) throw UndeclaredIdentifierError(e.name, e.span);
                return *d;
            }
            case ExprKind::Add:
            case ExprKind::Sub: {
                std::vector<const Expr*> terms;
                flatten_additive(e, terms);
                return check_group(terms, ViolationRule::AdditionMismatch);
            }
            case ExprKind::Neg:
                return infer(e.children[0]);
            case ExprKind::Mul: {
                Dimension acc = infer(e.children[0]);
                for (std::size_t i = 1; i < e.children.size(); ++i) acc = acc * infer(e.children[i]);
                return acc;
            }
            case ExprKind::Div:
                return infer(e.children[0]) / infer(e.children[1]);
            case ExprKind::Pow:
                return infer_pow(e);
            case ExprKind::Der:
                return infer(e.children[0]) / env_.time();
            case ExprKind::Integ:
                return infer(e.children[0]) * env_.time();
            case ExprKind::Call:
                return infer_call(e);
        }
        throw std::logic_error("unhandled expression kind");
    }

    // Shared by Add/Sub nodes and the whole-equation constraint.
    Dimension check_group(const std::vector<const Expr*>& terms, ViolationRule rule) {
        std::vector<Dimension> dims;
        dims.reserve(terms.size());
        for (const Expr* t : terms) dims.push_back(infer(*t));
        std::size_t ref = consensus_index(dims);
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (!(dims[i] == dims[ref])) {
                report({equation_, rule, terms[i]->span, dims[ref], dims[i]});
            }
        }
        return dims[ref];
    }

    Dimension check_equation_sides(const Expr& lhs, const Expr& rhs) {
        std::vector<const Expr*> left, right;
        flatten_additive(lhs, left);
        flatten_additive(rhs, right);

        std::vector<const Expr*> all = left;
        all.insert(all.end(), right.begin(), right.end());
        std::vector<Dimension> dims;
        dims.reserve(all.size());
        for (const Expr* t : all) dims.push_back(infer(*t));
        std::size_t ref = consensus_index(dims);
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (dims[i] == dims[ref]) continue;
            // A mismatching term that is an entire equation side is an
            // equality failure; a term inside a sum is an addition failure.
            bool whole_side = i < left.size() ? left.size() == 1 : right.size() == 1;
            ViolationRule rule = whole_side ? ViolationRule::EqualityMismatch
                                            : ViolationRule::AdditionMismatch;
            report({equation_, rule, all[i]->span, dims[ref], dims[i]});
        }
        return dims[ref];
    }

private:
    Dimension infer_pow(const Expr& e) {
        Dimension base = infer(e.children[0]);
        const PowExponent& exp = e.exponent;
        if (!exp.is_param) {
            return base.pow(exp.value);
        }
        const Dimension* pd = env_.lookup(exp.param);
        if (!pd) throw UndeclaredIdentifierError(exp.param, e.span);
        if (!pd->dimensionless()) {
            report({equation_, ViolationRule::ExponentNotDimensionless, e.span,
                    Dimension::one(env_.system()), *pd});
            return base;
        }
        if (base.dimensionless()) return base;
        std::optional<Rational> value = env_.param_binding(exp.param);
        if (!value) {
            // Dimensionless but unbound: the exponent of a dimensionful base
            // must be a known rational.
            report({equation_, ViolationRule::ExponentNotDimensionless, e.span,
                    Dimension::one(env_.system()), *pd});
            return base;
        }
        return base.pow(*value);
    }

    Dimension infer_call(const Expr& e) {
        const FuncSig* sig = env_.lookup_func(e.name);
        if (!sig) throw UndeclaredIdentifierError(e.name, e.span);
        if (sig->transcendental) {
            for (const Expr& arg : e.children) {
                Dimension ad = infer(arg);
                if (!ad.dimensionless()) {
                    report({equation_, ViolationRule::TranscendentalArgNotDimensionless, arg.span,
                            Dimension::one(env_.system()), ad});
                }
            }
            return Dimension::one(env_.system());
        }
        for (std::size_t i = 0; i < e.children.size(); ++i) {
            Dimension ad = infer(e.children[i]);
            if (i < sig->arg_dims.size() && !(ad == sig->arg_dims[i])) {
                report({equation_, ViolationRule::FunctionArgMismatch, e.children[i].span,
                        sig->arg_dims[i], ad});
            }
        }
        return sig->result_dim ? *sig->result_dim : Dimension::one(env_.system());
    }

    void report(Violation v) {
        if (sink_) {
            sink_->push_back(std::move(v));
        } else {
            throw ViolationError(std::move(v));
        }
    }

    const Env& env_;
    std::vector<Violation>* sink_;
    std::string equation_;
};

}  // namespace

Dimension infer_dimension(const Expr& e, const Env& env) {
    Inference inf(env, nullptr, {});
    return inf.infer(e);
}

Dimension infer_dimension(const Expr& e, const Env& env, std::vector<Violation>& out) {
    Inference inf(env, &out, {});
    return inf.infer(e);
}

EquationReport check_equation(const std::string& name, const Expr& lhs, const Expr& rhs,
                              const Env& env) {
    EquationReport rep;
    rep.name = name;
    Inference inf(env, &rep.violations, name);
    inf.check_equation_sides(lhs, rhs);
    rep.verdict = rep.violations.empty() ? Verdict::Homogeneous : Verdict::Inhomogeneous;
    return rep;
}

bool Report::all_homogeneous() const {
    return std::all_of(equations.begin(), equations.end(),
                       [](const EquationReport& e) { return e.verdict == Verdict::Homogeneous; });
}

std::size_t Report::violation_count() const {
    std::size_t n = 0;
    for (const auto& e : equations) n += e.violations.size();
    return n;
}

Report check_model(const ModelSpec& spec, std::string model_label) {
    Report rep;
    rep.model = std::move(model_label);
    rep.inferred = solve_unknown_dimensions(spec);
    Env env = Env::from_model(spec, rep.inferred);
    for (const auto& eq : spec.equations) {
        rep.equations.push_back(check_equation(eq.name, eq.lhs, eq.rhs, env));
    }
    return rep;
}

}  // namespace dimcheck
