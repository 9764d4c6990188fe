#include "dimcheck/checker.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace dimcheck {

UnsolvableInferenceError::UnsolvableInferenceError(Reason r, std::string witness_)
    : std::runtime_error(std::string("unknown dimensions are ") +
                         (r == Reason::Underdetermined ? "underdetermined" : "inconsistent") +
                         " (witness: " + witness_ + ")"),
      reason(r),
      witness(std::move(witness_)) {}

namespace {

// Dimension with unresolved factors: known * prod(unknown_i ^ coeff_i).
// Combining dimensions keeps the unknown coefficients linear, which is what
// lets the exponent equations be solved by Gaussian elimination.
struct SymDim {
    Dimension known;
    std::map<std::string, Rational> coeffs;

    static SymDim constant(Dimension d) { return {std::move(d), {}}; }

    SymDim operator*(const SymDim& o) const {
        SymDim out{known * o.known, coeffs};
        for (const auto& [name, c] : o.coeffs) {
            auto [it, fresh] = out.coeffs.try_emplace(name, c);
            if (!fresh) it->second = it->second + c;
            if (it->second.is_zero()) out.coeffs.erase(it);
        }
        return out;
    }

    SymDim pow(const Rational& e) const {
        SymDim out{known.pow(e), {}};
        if (e.is_zero()) return out;
        for (const auto& [name, c] : coeffs) out.coeffs.emplace(name, c * e);
        return out;
    }

    SymDim inverse() const { return pow(Rational(-1)); }
};

// One linear constraint: sum(coeffs_u * exponents of unknown u) == rhs,
// componentwise per base dimension.
struct Row {
    std::vector<Rational> coeffs;  // per unknown, in declaration order
    std::vector<Rational> rhs;     // per base dimension
    std::string equation;
};

// Raised when an equation cannot contribute linear constraints (an exponent
// parameter without a usable binding). The checker reports the problem with a
// proper violation; the solver just skips the equation.
struct SkipEquation {};

class ConstraintBuilder {
public:
    ConstraintBuilder(const ModelSpec& spec, const Env& env,
                      const std::vector<std::string>& unknowns)
        : spec_(spec), env_(env), unknowns_(unknowns) {}

    std::vector<Row> build() {
        std::vector<Row> rows;
        for (const auto& eq : spec_.equations) {
            std::vector<Row> eq_rows;
            try {
                current_ = &eq_rows;
                equation_ = eq.name;
                SymDim l = walk(eq.lhs);
                SymDim r = walk(eq.rhs);
                equate(l, r);
            } catch (const SkipEquation&) {
                continue;
            }
            for (Row& row : eq_rows) {
                bool nontrivial = std::any_of(row.coeffs.begin(), row.coeffs.end(),
                                              [](const Rational& c) { return !c.is_zero(); });
                // Rows without unknowns are plain homogeneity facts; the
                // checker reports those with spans, so drop them here.
                if (nontrivial) rows.push_back(std::move(row));
            }
        }
        return rows;
    }

private:
    SymDim walk(const Expr& e) {
        switch (e.kind) {
            case ExprKind::Num:
                return SymDim::constant(Dimension::one(env_.system()));
            case ExprKind::Var: {
                if (std::find(unknowns_.begin(), unknowns_.end(), e.name) != unknowns_.end()) {
                    SymDim s{Dimension::one(env_.system()), {}};
                    s.coeffs.emplace(e.name, Rational(1));
                    return s;
                }
                const Dimension* d = env_.lookup(e.name);
                if (!d) throw UndeclaredIdentifierError(e.name, e.span);
                return SymDim::constant(*d);
            }
            case ExprKind::Add:
            case ExprKind::Sub: {
                std::vector<const Expr*> terms;
                flatten(e, terms);
                SymDim first = walk(*terms[0]);
                for (std::size_t i = 1; i < terms.size(); ++i) equate(first, walk(*terms[i]));
                return first;
            }
            case ExprKind::Neg:
                return walk(e.children[0]);
            case ExprKind::Mul: {
                SymDim acc = walk(e.children[0]);
                for (std::size_t i = 1; i < e.children.size(); ++i) acc = acc * walk(e.children[i]);
                return acc;
            }
            case ExprKind::Div:
                return walk(e.children[0]) * walk(e.children[1]).inverse();
            case ExprKind::Pow: {
                SymDim base = walk(e.children[0]);
                if (!e.exponent.is_param) return base.pow(e.exponent.value);
                const Dimension* pd = env_.lookup(e.exponent.param);
                std::optional<Rational> v = env_.param_binding(e.exponent.param);
                if (!pd || !pd->dimensionless() || !v) throw SkipEquation{};
                return base.pow(*v);
            }
            case ExprKind::Der:
                return walk(e.children[0]) * SymDim::constant(env_.time()).inverse();
            case ExprKind::Integ:
                return walk(e.children[0]) * SymDim::constant(env_.time());
            case ExprKind::Call: {
                const FuncSig* sig = env_.lookup_func(e.name);
                if (!sig) throw UndeclaredIdentifierError(e.name, e.span);
                Dimension one = Dimension::one(env_.system());
                for (std::size_t i = 0; i < e.children.size(); ++i) {
                    SymDim arg = walk(e.children[i]);
                    const Dimension& want =
                        sig->transcendental
                            ? one
                            : (i < sig->arg_dims.size() ? sig->arg_dims[i] : one);
                    equate(arg, SymDim::constant(want));
                }
                return SymDim::constant(sig->result_dim ? *sig->result_dim : one);
            }
        }
        throw std::logic_error("unhandled expression kind");
    }

    static void flatten(const Expr& e, std::vector<const Expr*>& out) {
        switch (e.kind) {
            case ExprKind::Add:
            case ExprKind::Sub:
                for (const Expr& c : e.children) flatten(c, out);
                return;
            case ExprKind::Neg:
                flatten(e.children[0], out);
                return;
            default:
                out.push_back(&e);
        }
    }

    void equate(const SymDim& a, const SymDim& b) {
        Row row;
        row.equation = equation_;
        row.coeffs.assign(unknowns_.size(), Rational(0));
        for (const auto& [name, c] : a.coeffs) row.coeffs[index_of(name)] = c;
        for (const auto& [name, c] : b.coeffs) {
            std::size_t i = index_of(name);
            row.coeffs[i] = row.coeffs[i] - c;
        }
        Dimension gap = b.known / a.known;
        row.rhs.assign(env_.system()->size(), Rational(0));
        for (const auto& [idx, exp] : gap.exponents()) row.rhs[idx] = exp;
        current_->push_back(std::move(row));
    }

    std::size_t index_of(const std::string& name) const {
        auto it = std::find(unknowns_.begin(), unknowns_.end(), name);
        return static_cast<std::size_t>(it - unknowns_.begin());
    }

    const ModelSpec& spec_;
    const Env& env_;
    const std::vector<std::string>& unknowns_;
    std::vector<Row>* current_ = nullptr;
    std::string equation_;
};

}  // namespace

std::vector<std::pair<std::string, Dimension>> solve_unknown_dimensions(const ModelSpec& spec) {
    std::vector<std::string> unknowns;
    for (const auto& v : spec.vars) {
        if (!v.dim) unknowns.push_back(v.name);
    }
    if (unknowns.empty()) return {};

    Env env = Env::from_model(spec);
    ConstraintBuilder builder(spec, env, unknowns);
    std::vector<Row> rows = builder.build();

    const std::size_t n = unknowns.size();
    const std::size_t bases = spec.system->size();

    // Forward elimination with exact rationals.
    std::vector<int> pivot_of_col(n, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel].coeffs[col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        Rational inv = rows[rank].coeffs[col].reciprocal();
        for (auto& c : rows[rank].coeffs) c = c * inv;
        for (auto& r : rows[rank].rhs) r = r * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i].coeffs[col].is_zero()) continue;
            Rational f = rows[i].coeffs[col];
            for (std::size_t j = 0; j < n; ++j) {
                rows[i].coeffs[j] = rows[i].coeffs[j] - f * rows[rank].coeffs[j];
            }
            for (std::size_t b = 0; b < bases; ++b) {
                rows[i].rhs[b] = rows[i].rhs[b] - f * rows[rank].rhs[b];
            }
        }
        pivot_of_col[col] = static_cast<int>(rank);
        ++rank;
    }

    for (std::size_t i = rank; i < rows.size(); ++i) {
        bool rhs_nonzero = std::any_of(rows[i].rhs.begin(), rows[i].rhs.end(),
                                       [](const Rational& r) { return !r.is_zero(); });
        if (rhs_nonzero) {
            throw UnsolvableInferenceError(UnsolvableInferenceError::Reason::Inconsistent,
                                           rows[i].equation);
        }
    }
    for (std::size_t col = 0; col < n; ++col) {
        if (pivot_of_col[col] < 0) {
            throw UnsolvableInferenceError(UnsolvableInferenceError::Reason::Underdetermined,
                                           unknowns[col]);
        }
    }

    std::vector<std::pair<std::string, Dimension>> out;
    out.reserve(n);
    for (std::size_t col = 0; col < n; ++col) {
        const Row& row = rows[static_cast<std::size_t>(pivot_of_col[col])];
        Dimension::ExponentList exps;
        for (std::size_t b = 0; b < bases; ++b) {
            if (!row.rhs[b].is_zero()) exps.emplace_back(b, row.rhs[b]);
        }
        out.emplace_back(unknowns[col], Dimension::from_exponents(spec.system, std::move(exps)));
    }
    return out;
}

std::vector<std::vector<Rational>> dimensionless_groups(
    const std::vector<std::pair<std::string, Dimension>>& vars) {
    if (vars.empty()) throw std::invalid_argument("dimensionless_groups needs at least one variable");
    const SystemPtr& sys = vars.front().second.system();
    for (const auto& [name, dim] : vars) {
        if (!(dim.system() == sys || *dim.system() == *sys)) throw MixedSystemsError();
    }

    const std::size_t rows_n = sys->size();
    const std::size_t cols_n = vars.size();
    std::vector<std::vector<Rational>> m(rows_n, std::vector<Rational>(cols_n, Rational(0)));
    for (std::size_t j = 0; j < cols_n; ++j) {
        for (const auto& [idx, exp] : vars[j].second.exponents()) m[idx][j] = exp;
    }

    // Reduced row echelon form, pivoting columns left to right.
    std::vector<int> pivot_col_of_row;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_n && rank < rows_n; ++col) {
        std::size_t sel = rank;
        while (sel < rows_n && m[sel][col].is_zero()) ++sel;
        if (sel == rows_n) continue;
        std::swap(m[rank], m[sel]);
        Rational inv = m[rank][col].reciprocal();
        for (auto& x : m[rank]) x = x * inv;
        for (std::size_t i = 0; i < rows_n; ++i) {
            if (i == rank || m[i][col].is_zero()) continue;
            Rational f = m[i][col];
            for (std::size_t j = 0; j < cols_n; ++j) m[i][j] = m[i][j] - f * m[rank][j];
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++rank;
    }

    std::vector<bool> is_pivot(cols_n, false);
    for (int pc : pivot_col_of_row) is_pivot[static_cast<std::size_t>(pc)] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < cols_n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(cols_n, Rational(0));
        v[free_col] = Rational(1);
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
            v[static_cast<std::size_t>(pivot_col_of_row[r])] = -m[r][free_col];
        }
        // Scale to smallest integer form, first nonzero entry positive.
        std::int64_t lcm = 1;
        for (const auto& x : v) lcm = std::lcm(lcm, x.den());
        std::int64_t gcd = 0;
        for (auto& x : v) {
            x = x * Rational(lcm);
            gcd = std::gcd(gcd, x.num());
        }
        if (gcd > 1) {
            for (auto& x : v) x = x / Rational(gcd);
        }
        for (const auto& x : v) {
            if (x.is_zero()) continue;
            if (x < Rational(0)) {
                for (auto& y : v) y = -y;
            }
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace dimcheck
