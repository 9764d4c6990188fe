#include "dimcheck/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace dimcheck {

ParseError::ParseError(Kind k, Span sp, std::string expected_, std::string found_)
    : std::runtime_error("line " + std::to_string(sp.line) + ", col " +
                         std::to_string(sp.col_start) + ": expected " + expected_ +
                         ", found " + found_),
      kind(k),
      span(sp),
      expected(std::move(expected_)),
      found(std::move(found_)) {}

namespace {

enum class Tok {
    Ident,
    Number,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Colon,
    Equals,
    Arrow,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    Span span;
};

const char* tok_name(Tok k) {
    switch (k) {
        case Tok::Ident: return "identifier";
        case Tok::Number: return "number";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Star: return "'*'";
        case Tok::Slash: return "'/'";
        case Tok::Caret: return "'^'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Comma: return "','";
        case Tok::Colon: return "':'";
        case Tok::Equals: return "'='";
        case Tok::Arrow: return "'->'";
        case Tok::End: return "end of line";
    }
    return "?";
}

[[noreturn]] void syntax_error(Span sp, std::string expected, std::string found) {
    throw ParseError(ParseError::Kind::Syntax, sp, std::move(expected), std::move(found));
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex_line(std::string_view line, int line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto col = [&](std::size_t pos) { return static_cast<int>(pos) + 1; };
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;  // comment to end of line
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (ident_start(c)) {
            while (i < line.size() && ident_char(line[i])) ++i;
            out.push_back({Tok::Ident, std::string(line.substr(start, i - start)),
                           {line_no, col(start), col(i)}});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
            if (i < line.size() && line[i] == '.') {
                ++i;
                while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
            }
            if (i < line.size() && (line[i] == 'e' || line[i] == 'E')) {
                std::size_t mark = i;
                ++i;
                if (i < line.size() && (line[i] == '+' || line[i] == '-')) ++i;
                if (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
                    while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
                } else {
                    i = mark;  // "3e" is the number 3 followed by identifier e
                }
            }
            out.push_back({Tok::Number, std::string(line.substr(start, i - start)),
                           {line_no, col(start), col(i)}});
            continue;
        }
        Tok kind;
        std::size_t len = 1;
        switch (c) {
            case '+': kind = Tok::Plus; break;
            case '*': kind = Tok::Star; break;
            case '/': kind = Tok::Slash; break;
            case '^': kind = Tok::Caret; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case ',': kind = Tok::Comma; break;
            case ':': kind = Tok::Colon; break;
            case '=': kind = Tok::Equals; break;
            case '-':
                if (i + 1 < line.size() && line[i + 1] == '>') {
                    kind = Tok::Arrow;
                    len = 2;
                } else {
                    kind = Tok::Minus;
                }
                break;
            default:
                syntax_error({line_no, col(i), col(i + 1)}, "a token",
                             "'" + std::string(1, c) + "'");
        }
        i += len;
        out.push_back({kind, std::string(line.substr(start, len)), {line_no, col(start), col(i)}});
    }
    out.push_back({Tok::End, "", {line_no, col(line.size()), col(line.size() + 1)}});
    return out;
}

class TokenStream {
public:
    explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
        return toks_[i];
    }
    const Token& next() {
        const Token& t = toks_[pos_];
        if (pos_ + 1 < toks_.size()) ++pos_;
        return t;
    }
    Token expect(Tok kind, const char* what) {
        if (peek().kind != kind) {
            syntax_error(peek().span, what, describe(peek()));
        }
        return next();
    }
    bool at(Tok kind) const { return peek().kind == kind; }

    static std::string describe(const Token& t) {
        if (t.kind == Tok::End) return "end of line";
        return "'" + t.text + "'";
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

Span merge(Span a, Span b) {
    return {a.line, a.col_start, std::max(a.col_end, b.col_end)};
}

const std::set<std::string, std::less<>>& reserved_names() {
    static const std::set<std::string, std::less<>> names = {
        "dims", "var", "param", "fn", "eq", "der", "integ", "infer", "transcendental"};
    return names;
}

// ---------------------------------------------------------------------------
// dimension expressions
// ---------------------------------------------------------------------------

Rational parse_rational_tokens(TokenStream& ts) {
    bool negative = false;
    if (ts.at(Tok::Minus)) {
        ts.next();
        negative = true;
    } else if (ts.at(Tok::Plus)) {
        ts.next();
    }
    Token numt = ts.expect(Tok::Number, "an integer");
    std::int64_t num = 0;
    auto [p, ec] = std::from_chars(numt.text.data(), numt.text.data() + numt.text.size(), num);
    if (ec != std::errc{} || p != numt.text.data() + numt.text.size()) {
        syntax_error(numt.span, "an integer", "'" + numt.text + "'");
    }
    std::int64_t den = 1;
    if (ts.at(Tok::Slash)) {
        ts.next();
        Token dent = ts.expect(Tok::Number, "an integer denominator");
        auto [q, ec2] = std::from_chars(dent.text.data(), dent.text.data() + dent.text.size(), den);
        if (ec2 != std::errc{} || q != dent.text.data() + dent.text.size() || den == 0) {
            syntax_error(dent.span, "a nonzero integer denominator", "'" + dent.text + "'");
        }
    }
    return {negative ? -num : num, den};
}

Dimension parse_dim_factor(TokenStream& ts, const SystemPtr& sys);

Dimension parse_dim_product(TokenStream& ts, const SystemPtr& sys) {
    Dimension acc = parse_dim_factor(ts, sys);
    while (ts.at(Tok::Star) || ts.at(Tok::Slash)) {
        bool mul = ts.next().kind == Tok::Star;
        Dimension rhs = parse_dim_factor(ts, sys);
        acc = mul ? acc * rhs : acc / rhs;
    }
    return acc;
}

Dimension parse_dim_factor(TokenStream& ts, const SystemPtr& sys) {
    if (ts.at(Tok::LParen)) {
        ts.next();
        Dimension inner = parse_dim_product(ts, sys);
        ts.expect(Tok::RParen, "')'");
        return inner;
    }
    if (ts.at(Tok::Number)) {
        Token t = ts.next();
        if (t.text != "1") {
            syntax_error(t.span, "base dimension name or 1", "'" + t.text + "'");
        }
        return Dimension::one(sys);
    }
    Token name = ts.expect(Tok::Ident, "base dimension name");
    if (!sys->has(name.text)) {
        throw ParseError(ParseError::Kind::UnknownBaseDimension, name.span,
                         "a declared base dimension", "'" + name.text + "'");
    }
    Dimension d = Dimension::base(sys, name.text);
    if (ts.at(Tok::Caret)) {
        ts.next();
        Rational e(1);
        if (ts.at(Tok::LParen)) {
            ts.next();
            e = parse_rational_tokens(ts);
            ts.expect(Tok::RParen, "')'");
        } else {
            e = parse_rational_tokens(ts);
        }
        d = d.pow(e);
    }
    return d;
}

// ---------------------------------------------------------------------------
// expressions
// ---------------------------------------------------------------------------

// Declaration table the expression parser validates identifiers against.
// During parse_model this is the (completed) spec under construction.
struct DeclView {
    const ModelSpec* spec;
};

Expr parse_expression(TokenStream& ts, const DeclView& dv);

Expr parse_atom(TokenStream& ts, const DeclView& dv) {
    const Token& t = ts.peek();
    switch (t.kind) {
        case Tok::Number: {
            Token num = ts.next();
            double v = 0.0;
            auto [p, ec] = std::from_chars(num.text.data(), num.text.data() + num.text.size(), v);
            if (ec != std::errc{} || p != num.text.data() + num.text.size()) {
                syntax_error(num.span, "a numeric literal", "'" + num.text + "'");
            }
            Expr e = Expr::num(v);
            e.span = num.span;
            return e;
        }
        case Tok::LParen: {
            Token open = ts.next();
            Expr inner = parse_expression(ts, dv);
            Token close = ts.expect(Tok::RParen, "')'");
            inner.span = merge(open.span, close.span);
            return inner;
        }
        case Tok::Ident: {
            Token name = ts.next();
            if (name.text == "der" || name.text == "integ") {
                ts.expect(Tok::LParen, "'('");
                Expr body = parse_expression(ts, dv);
                Token close = ts.expect(Tok::RParen, "')'");
                Expr e = name.text == "der" ? Expr::der(std::move(body))
                                            : Expr::integ(std::move(body));
                e.span = merge(name.span, close.span);
                return e;
            }
            if (ts.at(Tok::LParen)) {
                const FuncSig* sig = dv.spec->find_func(name.text);
                if (!sig) {
                    if (dv.spec->declared(name.text)) {
                        syntax_error(name.span, "a function name",
                                     "'" + name.text + "' (not declared as a function)");
                    }
                    throw ParseError(ParseError::Kind::UndeclaredIdentifier, name.span,
                                     "a declared function", "'" + name.text + "'");
                }
                ts.next();
                std::vector<Expr> args;
                args.push_back(parse_expression(ts, dv));
                while (ts.at(Tok::Comma)) {
                    ts.next();
                    args.push_back(parse_expression(ts, dv));
                }
                Token close = ts.expect(Tok::RParen, "')'");
                if (args.size() != sig->arity) {
                    syntax_error(merge(name.span, close.span),
                                 std::to_string(sig->arity) + " argument(s) to '" + name.text + "'",
                                 std::to_string(args.size()) + " argument(s)");
                }
                Expr e = Expr::call(name.text, std::move(args));
                e.span = merge(name.span, close.span);
                return e;
            }
            if (!dv.spec->find_var(name.text) && !dv.spec->find_param(name.text)) {
                if (dv.spec->find_func(name.text)) {
                    syntax_error(name.span, "'(' after function name", "'" + name.text + "'");
                }
                throw ParseError(ParseError::Kind::UndeclaredIdentifier, name.span,
                                 "a declared identifier", "'" + name.text + "'");
            }
            Expr e = Expr::var(name.text);
            e.span = name.span;
            return e;
        }
        default:
            syntax_error(t.span, "an expression", TokenStream::describe(t));
    }
}

Expr parse_powexpr(TokenStream& ts, const DeclView& dv) {
    Expr base = parse_atom(ts, dv);
    if (!ts.at(Tok::Caret)) return base;
    ts.next();
    PowExponent exp;
    Span end_span;
    if (ts.at(Tok::Ident)) {
        Token name = ts.next();
        if (!dv.spec->find_param(name.text)) {
            throw ParseError(ParseError::Kind::UndeclaredIdentifier, name.span,
                             "a declared parameter as exponent", "'" + name.text + "'");
        }
        exp = PowExponent::parameter(name.text);
        end_span = name.span;
    } else if (ts.at(Tok::Number)) {
        Token num = ts.next();
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(num.text.data(), num.text.data() + num.text.size(), v);
        if (ec != std::errc{} || p != num.text.data() + num.text.size()) {
            syntax_error(num.span, "an integer exponent", "'" + num.text + "'");
        }
        exp = PowExponent::literal(Rational(v));
        end_span = num.span;
    } else if (ts.at(Tok::LParen)) {
        ts.next();
        Rational r = parse_rational_tokens(ts);
        Token close = ts.expect(Tok::RParen, "')'");
        exp = PowExponent::literal(r);
        end_span = close.span;
    } else {
        syntax_error(ts.peek().span, "a rational literal or parameter name as exponent",
                     TokenStream::describe(ts.peek()));
    }
    Span sp = merge(base.span, end_span);
    Expr e = Expr::pow(std::move(base), std::move(exp));
    e.span = sp;
    return e;
}

Expr parse_mulchain(TokenStream& ts, const DeclView& dv) {
    Expr acc = parse_powexpr(ts, dv);
    bool chain = false;  // acc was built by this loop and may be extended
    while (ts.at(Tok::Star) || ts.at(Tok::Slash)) {
        bool mul = ts.next().kind == Tok::Star;
        Expr rhs = parse_powexpr(ts, dv);
        Span sp = merge(acc.span, rhs.span);
        if (mul) {
            if (chain && acc.kind == ExprKind::Mul) {
                acc.children.push_back(std::move(rhs));
            } else {
                std::vector<Expr> cs;
                cs.push_back(std::move(acc));
                cs.push_back(std::move(rhs));
                acc = Expr::mul(std::move(cs));
            }
            chain = true;
        } else {
            acc = Expr::div(std::move(acc), std::move(rhs));
            chain = false;
        }
        acc.span = sp;
    }
    return acc;
}

// Unary minus binds a whole product: "-rho*t" is the negation of rho*t.
Expr parse_addend(TokenStream& ts, const DeclView& dv) {
    if (ts.at(Tok::Minus)) {
        Token minus = ts.next();
        Expr inner = parse_addend(ts, dv);
        Span sp = merge(minus.span, inner.span);
        Expr e = Expr::neg(std::move(inner));
        e.span = sp;
        return e;
    }
    return parse_mulchain(ts, dv);
}

Expr parse_expression(TokenStream& ts, const DeclView& dv) {
    Expr acc = parse_addend(ts, dv);
    bool chain = false;
    while (ts.at(Tok::Plus) || ts.at(Tok::Minus)) {
        bool add = ts.next().kind == Tok::Plus;
        Expr rhs = parse_addend(ts, dv);
        Span sp = merge(acc.span, rhs.span);
        if (add) {
            if (chain && acc.kind == ExprKind::Add) {
                acc.children.push_back(std::move(rhs));
            } else {
                std::vector<Expr> cs;
                cs.push_back(std::move(acc));
                cs.push_back(std::move(rhs));
                acc = Expr::add(std::move(cs));
            }
            chain = true;
        } else {
            acc = Expr::sub(std::move(acc), std::move(rhs));
            chain = false;
        }
        acc.span = sp;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// model file
// ---------------------------------------------------------------------------

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.emplace_back(text.substr(start));
            break;
        }
        lines.emplace_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

bool blank_or_comment(const std::vector<Token>& toks) {
    return toks.size() == 1;  // just End
}

struct Declared {
    std::set<std::string, std::less<>> names;

    void insert(const Token& name) {
        if (reserved_names().count(name.text)) {
            syntax_error(name.span, "a non-reserved name", "'" + name.text + "'");
        }
        if (!names.insert(name.text).second) {
            throw ParseError(ParseError::Kind::DuplicateName, name.span, "a fresh name",
                             "duplicate '" + name.text + "'");
        }
    }
};

void parse_var_line(TokenStream& ts, ModelSpec& spec, Declared& decls) {
    Token name = ts.expect(Tok::Ident, "variable name");
    decls.insert(name);
    ts.expect(Tok::Colon, "':'");
    if (ts.at(Tok::Ident) && ts.peek().text == "infer") {
        ts.next();
        ts.expect(Tok::End, "end of line");
        spec.vars.push_back({name.text, std::nullopt, name.span});
        return;
    }
    Dimension d = parse_dim_product(ts, spec.system);
    ts.expect(Tok::End, "end of line");
    spec.vars.push_back({name.text, std::move(d), name.span});
}

void parse_param_line(TokenStream& ts, ModelSpec& spec, Declared& decls) {
    Token name = ts.expect(Tok::Ident, "parameter name");
    decls.insert(name);
    ts.expect(Tok::Colon, "':'");
    Dimension d = parse_dim_product(ts, spec.system);
    std::optional<Rational> binding;
    if (ts.at(Tok::Equals)) {
        ts.next();
        binding = parse_rational_tokens(ts);
    }
    ts.expect(Tok::End, "end of line");
    spec.params.push_back({name.text, std::move(d), binding, name.span});
}

void parse_fn_line(TokenStream& ts, ModelSpec& spec, Declared& decls) {
    Token name = ts.expect(Tok::Ident, "function name");
    decls.insert(name);
    if (ts.at(Tok::Ident) && ts.peek().text == "transcendental") {
        ts.next();
        ts.expect(Tok::LParen, "'('");
        Token arity = ts.expect(Tok::Number, "an arity");
        std::int64_t n = 0;
        auto [p, ec] = std::from_chars(arity.text.data(), arity.text.data() + arity.text.size(), n);
        if (ec != std::errc{} || p != arity.text.data() + arity.text.size() || n < 1) {
            syntax_error(arity.span, "an arity of at least 1", "'" + arity.text + "'");
        }
        ts.expect(Tok::RParen, "')'");
        ts.expect(Tok::End, "end of line");
        FuncSig sig;
        sig.name = name.text;
        sig.transcendental = true;
        sig.arity = static_cast<std::size_t>(n);
        spec.funcs.push_back(std::move(sig));
        return;
    }
    ts.expect(Tok::LParen, "'('");
    std::vector<Dimension> args;
    args.push_back(parse_dim_product(ts, spec.system));
    while (ts.at(Tok::Comma)) {
        ts.next();
        args.push_back(parse_dim_product(ts, spec.system));
    }
    ts.expect(Tok::RParen, "')'");
    ts.expect(Tok::Arrow, "'->'");
    Dimension result = parse_dim_product(ts, spec.system);
    ts.expect(Tok::End, "end of line");
    FuncSig sig;
    sig.name = name.text;
    sig.transcendental = false;
    sig.arity = args.size();
    sig.arg_dims = std::move(args);
    sig.result_dim = std::move(result);
    spec.funcs.push_back(std::move(sig));
}

void parse_eq_line(TokenStream& ts, ModelSpec& spec, Declared& eq_names) {
    Token name = ts.expect(Tok::Ident, "equation name");
    eq_names.insert(name);
    ts.expect(Tok::Colon, "':'");
    DeclView dv{&spec};
    Expr lhs = parse_expression(ts, dv);
    ts.expect(Tok::Equals, "'='");
    Expr rhs = parse_expression(ts, dv);
    ts.expect(Tok::End, "end of line");
    Span sp = merge(name.span, rhs.span);
    spec.equations.push_back({name.text, std::move(lhs), std::move(rhs), sp});
}

}  // namespace

ModelSpec parse_model(std::string_view text) {
    ModelSpec spec;
    spec.source_lines = split_lines(text);

    std::vector<std::pair<int, std::vector<Token>>> decl_lines;
    for (std::size_t i = 0; i < spec.source_lines.size(); ++i) {
        auto toks = lex_line(spec.source_lines[i], static_cast<int>(i) + 1);
        if (!blank_or_comment(toks)) decl_lines.emplace_back(static_cast<int>(i) + 1, std::move(toks));
    }
    if (decl_lines.empty()) {
        syntax_error({1, 1, 2}, "a 'dims' declaration", "empty model");
    }

    // dims line: exactly one, first
    {
        TokenStream ts(decl_lines.front().second);
        Token kw = ts.expect(Tok::Ident, "'dims'");
        if (kw.text != "dims") {
            syntax_error(kw.span, "'dims' as the first declaration", "'" + kw.text + "'");
        }
        std::vector<std::string> names;
        while (!ts.at(Tok::End)) {
            Token n = ts.expect(Tok::Ident, "base dimension name");
            names.push_back(n.text);
        }
        if (names.empty()) {
            syntax_error(ts.peek().span, "at least one base dimension name", "end of line");
        }
        for (std::size_t i = 0; i < names.size(); ++i) {
            for (std::size_t j = i + 1; j < names.size(); ++j) {
                if (names[i] == names[j]) {
                    throw ParseError(ParseError::Kind::DuplicateName,
                                     decl_lines.front().second[j + 1].span, "a fresh base name",
                                     "duplicate '" + names[j] + "'");
                }
            }
        }
        spec.system = DimensionSystem::make(std::move(names));
    }

    Declared decls;
    Declared eq_names;
    std::vector<const std::vector<Token>*> eq_lines;

    // first pass: declarations; equations are parsed after so they can
    // reference any declaration in the file
    for (std::size_t li = 1; li < decl_lines.size(); ++li) {
        TokenStream ts(decl_lines[li].second);
        Token kw = ts.expect(Tok::Ident, "declaration keyword");
        if (kw.text == "dims") {
            syntax_error(kw.span, "a single 'dims' declaration", "a second 'dims'");
        } else if (kw.text == "var") {
            parse_var_line(ts, spec, decls);
        } else if (kw.text == "param") {
            parse_param_line(ts, spec, decls);
        } else if (kw.text == "fn") {
            parse_fn_line(ts, spec, decls);
        } else if (kw.text == "eq") {
            eq_lines.push_back(&decl_lines[li].second);
        } else {
            syntax_error(kw.span, "'var', 'param', 'fn' or 'eq'", "'" + kw.text + "'");
        }
    }

    for (const auto* toks : eq_lines) {
        TokenStream ts(*toks);
        ts.expect(Tok::Ident, "'eq'");
        parse_eq_line(ts, spec, eq_names);
    }

    return spec;
}

Expr parse_expr(std::string_view text, const ModelSpec& spec) {
    if (text.find('\n') != std::string_view::npos) {
        syntax_error({1, 1, 2}, "a single-line expression", "embedded newline");
    }
    TokenStream ts(lex_line(text, 1));
    DeclView dv{&spec};
    Expr e = parse_expression(ts, dv);
    ts.expect(Tok::End, "end of input");
    return e;
}

Dimension parse_dimexpr(std::string_view text, SystemPtr sys) {
    if (!sys) throw std::invalid_argument("null dimension system");
    TokenStream ts(lex_line(text, 1));
    Dimension d = parse_dim_product(ts, sys);
    ts.expect(Tok::End, "end of input");
    return d;
}

}  // namespace dimcheck
