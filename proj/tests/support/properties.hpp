#pragma once

// The randomized property suites. Each returns the number of cases run and
// the first failure (if any), so both the unit tests and the acceptance
// runner can drive them.

#include "generators.hpp"

#include "dimcheck/checker.hpp"
#include "dimcheck/parser.hpp"
#include "dimcheck/quantity.hpp"

#include <sstream>
#include <string>

namespace testsupport {

struct PropertyResult {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    void fail(const std::string& what) {
        if (failures == 0) first_failure = what;
        ++failures;
    }
};

// Group laws of dimension algebra: associativity, commutativity, identity,
// inverse, plus the power laws and normalization canonicity.
inline PropertyResult prop_group_laws(std::size_t n, std::uint64_t seed) {
    PropertyResult res;
    Rng rng(seed);
    dimcheck::SystemPtr sys = econ_system();
    dimcheck::Dimension one = dimcheck::Dimension::one(sys);
    for (std::size_t i = 0; i < n; ++i) {
        ++res.cases;
        dimcheck::Dimension a = random_dimension(rng, sys);
        dimcheck::Dimension b = random_dimension(rng, sys);
        dimcheck::Dimension c = random_dimension(rng, sys);
        dimcheck::Rational p = random_rational(rng);
        dimcheck::Rational q = random_rational(rng);
        if (!((a * b) * c == a * (b * c))) res.fail("associativity: " + a.str());
        if (!(a * b == b * a)) res.fail("commutativity: " + a.str() + ", " + b.str());
        if (!(a * one == a)) res.fail("identity: " + a.str());
        if (!(a * a.inverse() == one)) res.fail("inverse: " + a.str());
        if (!(a.pow(p).pow(q) == a.pow(p * q))) res.fail("pow composition: " + a.str());
        if (!(a.pow(0) == one)) res.fail("pow zero: " + a.str());
        for (const auto& [idx, exp] : (a * b).exponents()) {
            if (exp.is_zero()) res.fail("zero exponent stored: " + (a * b).str());
        }
        bool equal = a == b;
        bool exps_equal = a.exponents() == b.exponents();
        if (equal != exps_equal) res.fail("canonicity: " + a.str() + " vs " + b.str());
    }
    return res;
}

// quantity_add is defined exactly on the equidimensional diagonal.
inline PropertyResult prop_add_iff_equidimensional(std::size_t n, std::uint64_t seed) {
    PropertyResult res;
    Rng rng(seed);
    dimcheck::SystemPtr sys = econ_system();
    std::uniform_real_distribution<double> val(0.5, 2.0);
    for (std::size_t i = 0; i < n; ++i) {
        ++res.cases;
        dimcheck::Dimension da = random_dimension(rng, sys);
        dimcheck::Dimension db = rng() % 2 == 0 ? da : random_dimension(rng, sys);
        dimcheck::Quantity qa(val(rng), da);
        dimcheck::Quantity qb(val(rng), db);
        bool added = true;
        try {
            dimcheck::Quantity sum = qa + qb;
            if (!(sum.dim() == da)) res.fail("sum dimension changed: " + da.str());
            if (sum.value() != qa.value() + qb.value()) res.fail("sum value wrong");
        } catch (const dimcheck::NonEquidimensionalError&) {
            added = false;
        }
        if (added != (da == db)) {
            res.fail("add defined iff equidimensional: " + da.str() + " vs " + db.str());
        }
    }
    return res;
}

// format_expr output re-parses to a structurally equal tree.
inline PropertyResult prop_parser_roundtrip(std::size_t n, std::uint64_t seed) {
    PropertyResult res;
    Rng rng(seed);
    const dimcheck::ModelSpec& spec = fixture_model();
    std::uniform_int_distribution<int> depth(0, 4);
    for (std::size_t i = 0; i < n; ++i) {
        ++res.cases;
        dimcheck::Expr e = random_expr(rng, depth(rng));
        std::string text = dimcheck::format_expr(e);
        try {
            dimcheck::Expr back = dimcheck::parse_expr(text, spec);
            if (!dimcheck::structurally_equal(e, back)) {
                res.fail("round trip changed structure: " + text);
            }
        } catch (const std::exception& ex) {
            res.fail("round trip failed to parse '" + text + "': " + ex.what());
        }
    }
    return res;
}

// check_equation(lhs, rhs) and check_equation(rhs, lhs) agree on the verdict.
inline PropertyResult prop_verdict_symmetry(std::size_t n, std::uint64_t seed) {
    PropertyResult res;
    Rng rng(seed);
    const dimcheck::ModelSpec& spec = fixture_model();
    dimcheck::Env env = dimcheck::Env::from_model(spec);
    std::uniform_int_distribution<int> depth(0, 3);
    for (std::size_t i = 0; i < n; ++i) {
        ++res.cases;
        dimcheck::Expr lhs = random_expr(rng, depth(rng));
        dimcheck::Expr rhs = random_expr(rng, depth(rng));
        auto fwd = dimcheck::check_equation("fwd", lhs, rhs, env);
        auto bwd = dimcheck::check_equation("bwd", rhs, lhs, env);
        if (fwd.verdict != bwd.verdict) {
            res.fail("verdict asymmetry on: " + dimcheck::format_expr(lhs) + " = " +
                     dimcheck::format_expr(rhs));
        }
    }
    return res;
}

namespace detail {

inline void collect_nodes(dimcheck::Expr& e, std::vector<dimcheck::Expr*>& out) {
    out.push_back(&e);
    for (auto& c : e.children) collect_nodes(c, out);
}

}  // namespace detail

// Replacing any subexpression with another of equal dimension preserves the
// verdict.
inline PropertyResult prop_substitution_monotonicity(std::size_t n, std::uint64_t seed) {
    PropertyResult res;
    Rng rng(seed);
    const dimcheck::ModelSpec& spec = fixture_model();
    dimcheck::Env env = dimcheck::Env::from_model(spec);
    std::uniform_int_distribution<int> depth(1, 3);
    for (std::size_t i = 0; i < n; ++i) {
        ++res.cases;
        dimcheck::Expr lhs = random_expr(rng, depth(rng));
        dimcheck::Expr rhs = random_expr(rng, depth(rng));
        auto before = dimcheck::check_equation("eq", lhs, rhs, env).verdict;

        dimcheck::Expr& side = rng() % 2 == 0 ? lhs : rhs;
        std::vector<dimcheck::Expr*> nodes;
        detail::collect_nodes(side, nodes);
        dimcheck::Expr* target = nodes[rng() % nodes.size()];

        dimcheck::Expr copy = *target;
        dimcheck::Expr replacement = [&] {
            if (rng() % 2 == 0) {
                std::vector<dimcheck::Expr> fs;
                fs.push_back(dimcheck::Expr::num(3));
                fs.push_back(copy);
                return dimcheck::Expr::mul(std::move(fs));  // same dimension, scaled
            }
            std::vector<dimcheck::Expr> ts;
            ts.push_back(copy);
            ts.push_back(copy);
            return dimcheck::Expr::add(std::move(ts));  // same dimension, doubled
        }();
        *target = std::move(replacement);

        auto after = dimcheck::check_equation("eq", lhs, rhs, env).verdict;
        if (before != after) {
            res.fail("substitution changed verdict: " + dimcheck::format_expr(lhs) + " = " +
                     dimcheck::format_expr(rhs));
        }
    }
    return res;
}

// Multiplying both sides by the same declared variable preserves the verdict.
inline PropertyResult prop_scaling_invariance(std::size_t n, std::uint64_t seed) {
    PropertyResult res;
    Rng rng(seed);
    const dimcheck::ModelSpec& spec = fixture_model();
    dimcheck::Env env = dimcheck::Env::from_model(spec);
    std::uniform_int_distribution<int> depth(0, 3);
    const char* names[] = {"a", "b", "cc", "d", "t"};
    for (std::size_t i = 0; i < n; ++i) {
        ++res.cases;
        dimcheck::Expr lhs = random_expr(rng, depth(rng));
        dimcheck::Expr rhs = random_expr(rng, depth(rng));
        auto before = dimcheck::check_equation("eq", lhs, rhs, env).verdict;
        dimcheck::Expr scale = dimcheck::Expr::var(names[rng() % 5]);
        auto wrap = [&](dimcheck::Expr e) {
            std::vector<dimcheck::Expr> fs;
            fs.push_back(scale);
            fs.push_back(std::move(e));
            return dimcheck::Expr::mul(std::move(fs));
        };
        auto after =
            dimcheck::check_equation("eq", wrap(std::move(lhs)), wrap(std::move(rhs)), env).verdict;
        if (before != after) res.fail("scaling changed verdict");
    }
    return res;
}

}  // namespace testsupport
