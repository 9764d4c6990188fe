#include "dimcheck/ast.hpp"

#include <charconv>
#include <stdexcept>

namespace dimcheck {

namespace {

Expr node(ExprKind kind) {
    Expr e;
    e.kind = kind;
    return e;
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Expr Expr::num(double v) {
    require(v >= 0.0, "numeric literal must be nonnegative; wrap in neg()");
    Expr e = node(ExprKind::Num);
    e.number = v;
    return e;
}

Expr Expr::var(std::string name) {
    Expr e = node(ExprKind::Var);
    e.name = std::move(name);
    return e;
}

Expr Expr::add(std::vector<Expr> terms) {
    require(terms.size() >= 2, "add node needs at least two terms");
    Expr e = node(ExprKind::Add);
    e.children = std::move(terms);
    return e;
}

Expr Expr::sub(Expr a, Expr b) {
    Expr e = node(ExprKind::Sub);
    e.children.push_back(std::move(a));
    e.children.push_back(std::move(b));
    return e;
}

Expr Expr::mul(std::vector<Expr> factors) {
    require(factors.size() >= 2, "mul node needs at least two factors");
    Expr e = node(ExprKind::Mul);
    e.children = std::move(factors);
    return e;
}

Expr Expr::div(Expr a, Expr b) {
    Expr e = node(ExprKind::Div);
    e.children.push_back(std::move(a));
    e.children.push_back(std::move(b));
    return e;
}

Expr Expr::pow(Expr base, PowExponent exp) {
    Expr e = node(ExprKind::Pow);
    e.children.push_back(std::move(base));
    e.exponent = std::move(exp);
    return e;
}

Expr Expr::neg(Expr a) {
    Expr e = node(ExprKind::Neg);
    e.children.push_back(std::move(a));
    return e;
}

Expr Expr::der(Expr a) {
    Expr e = node(ExprKind::Der);
    e.children.push_back(std::move(a));
    return e;
}

Expr Expr::integ(Expr a) {
    Expr e = node(ExprKind::Integ);
    e.children.push_back(std::move(a));
    return e;
}

Expr Expr::call(std::string fname, std::vector<Expr> args) {
    require(!args.empty(), "call node needs at least one argument");
    Expr e = node(ExprKind::Call);
    e.name = std::move(fname);
    e.children = std::move(args);
    return e;
}

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ExprKind::Num:
            if (a.number != b.number) return false;
            break;
        case ExprKind::Var:
        case ExprKind::Call:
            if (a.name != b.name) return false;
            break;
        case ExprKind::Pow:
            if (a.exponent.is_param != b.exponent.is_param) return false;
            if (a.exponent.is_param) {
                if (a.exponent.param != b.exponent.param) return false;
            } else if (a.exponent.value != b.exponent.value) {
                return false;
            }
            break;
        default:
            break;
    }
    if (a.children.size() != b.children.size()) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i) {
        if (!structurally_equal(a.children[i], b.children[i])) return false;
    }
    return true;
}

namespace {

std::string format_number(double v) {
    char buf[40];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return {buf, p};
}

bool is_atom(const Expr& e) {
    switch (e.kind) {
        case ExprKind::Num:
        case ExprKind::Var:
        case ExprKind::Call:
        case ExprKind::Der:
        case ExprKind::Integ:
            return true;
        default:
            return false;
    }
}

bool is_kind(const Expr& e, std::initializer_list<ExprKind> kinds) {
    for (ExprKind k : kinds) {
        if (e.kind == k) return true;
    }
    return false;
}

void print(const Expr& e, std::string& out);

// Parenthesization mirrors the parser: a child is wrapped exactly when
// printing it bare would re-associate or re-flatten into a different tree.
void print_child(const Expr& c, bool parens, std::string& out) {
    if (parens) {
        out += '(';
        print(c, out);
        out += ')';
    } else {
        print(c, out);
    }
}

void print(const Expr& e, std::string& out) {
    using K = ExprKind;
    switch (e.kind) {
        case K::Num:
            out += format_number(e.number);
            return;
        case K::Var:
            out += e.name;
            return;
        case K::Call:
            out += e.name;
            out += '(';
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i) out += ", ";
                print(e.children[i], out);
            }
            out += ')';
            return;
        case K::Der:
        case K::Integ:
            out += e.kind == K::Der ? "der(" : "integ(";
            print(e.children[0], out);
            out += ')';
            return;
        case K::Add:
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i) out += " + ";
                const Expr& c = e.children[i];
                bool parens = i == 0 ? c.kind == K::Add : is_kind(c, {K::Add, K::Sub});
                print_child(c, parens, out);
            }
            return;
        case K::Sub:
            print_child(e.children[0], false, out);
            out += " - ";
            print_child(e.children[1], is_kind(e.children[1], {K::Add, K::Sub}), out);
            return;
        case K::Mul:
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i) out += " * ";
                const Expr& c = e.children[i];
                bool parens = i == 0 ? is_kind(c, {K::Add, K::Sub, K::Neg, K::Mul})
                                     : is_kind(c, {K::Add, K::Sub, K::Neg, K::Mul, K::Div});
                print_child(c, parens, out);
            }
            return;
        case K::Div:
            print_child(e.children[0], is_kind(e.children[0], {K::Add, K::Sub, K::Neg}), out);
            out += " / ";
            print_child(e.children[1],
                        is_kind(e.children[1], {K::Add, K::Sub, K::Neg, K::Mul, K::Div}), out);
            return;
        case K::Neg:
            out += '-';
            print_child(e.children[0], is_kind(e.children[0], {K::Add, K::Sub, K::Neg}), out);
            return;
        case K::Pow:
            print_child(e.children[0], !is_atom(e.children[0]), out);
            out += '^';
            if (e.exponent.is_param) {
                out += e.exponent.param;
            } else {
                out += '(';
                out += e.exponent.value.str();
                out += ')';
            }
            return;
    }
}

}  // namespace

std::string format_expr(const Expr& e) {
    std::string out;
    print(e, out);
    return out;
}

}  // namespace dimcheck
