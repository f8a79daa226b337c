#include "supersym/expr.hpp"

#include "supersym/errors.hpp"

#include <cctype>
#include <sstream>

namespace supersym {

Value Value::of_scalar(Rational c)
{
    Value v;
    v.family = Family::Scalar;
    v.scalar = std::move(c);
    return v;
}

Value Value::of_sym(SymSuper f)
{
    Value v;
    v.family = Family::Lambda;
    v.sym = std::move(f);
    return v;
}

Value Value::of_qsym(QSymSuper f)
{
    Value v;
    v.family = Family::QSym;
    v.qsym = std::move(f);
    return v;
}

Value Value::of_nsym(NSymSuper f)
{
    Value v;
    v.family = Family::NSym;
    v.nsym = std::move(f);
    return v;
}

bool Value::is_zero() const
{
    switch (family) {
    case Family::Scalar: return scalar.is_zero();
    case Family::Lambda: return sym.is_zero();
    case Family::QSym: return qsym.is_zero();
    case Family::NSym: return nsym.is_zero();
    }
    return true;
}

SymSuper Value::as_sym() const
{
    switch (family) {
    case Family::Scalar: {
        SymSuper f;
        f.add(SuperPartition{}, scalar);
        return f;
    }
    case Family::Lambda: return sym;
    case Family::QSym: return sqsym::is_symmetric(qsym);
    case Family::NSym: throw DomainError("cannot convert an H-expression to the m-basis");
    }
    return {};
}

QSymSuper Value::as_qsym() const
{
    switch (family) {
    case Family::Scalar: {
        QSymSuper f;
        f.add(DottedComposition{}, scalar);
        return f;
    }
    case Family::Lambda: return sqsym::include_lambda(sym);
    case Family::QSym: return qsym;
    case Family::NSym: throw DomainError("cannot convert an H-expression to the M-basis");
    }
    return {};
}

NSymSuper Value::as_nsym() const
{
    switch (family) {
    case Family::Scalar: {
        NSymSuper f;
        f.add(DottedComposition{}, scalar);
        return f;
    }
    case Family::NSym: return nsym;
    default: throw DomainError("cannot convert an m/e/M-expression to the H-basis");
    }
}

namespace {

struct Token {
    enum class Kind { Number, Ident, LBracket, RBracket, LParen, RParen, Comma, Tilde,
                      Plus, Minus, Star, Slash, End };
    Kind kind;
    std::size_t offset;
    Integer number;    // Kind::Number
    std::string ident; // Kind::Ident
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        Token t;
        t.offset = pos_;
        if (pos_ >= src_.size()) {
            t.kind = Token::Kind::End;
            return t;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            t.kind = Token::Kind::Number;
            t.number = Integer(src_.substr(start, pos_ - start));
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            t.kind = Token::Kind::Ident;
            t.ident = src_.substr(start, pos_ - start);
            return t;
        }
        ++pos_;
        switch (c) {
        case '[': t.kind = Token::Kind::LBracket; return t;
        case ']': t.kind = Token::Kind::RBracket; return t;
        case '(': t.kind = Token::Kind::LParen; return t;
        case ')': t.kind = Token::Kind::RParen; return t;
        case ',': t.kind = Token::Kind::Comma; return t;
        case '~': t.kind = Token::Kind::Tilde; return t;
        case '+': t.kind = Token::Kind::Plus; return t;
        case '-': t.kind = Token::Kind::Minus; return t;
        case '*': t.kind = Token::Kind::Star; return t;
        case '/': t.kind = Token::Kind::Slash; return t;
        default: throw ParseError(std::string("unexpected character '") + c + "'", t.offset);
        }
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(const std::string& src) : lexer_(src) { advance(); }

    std::unique_ptr<Expression> parse()
    {
        auto e = expr();
        expect(Token::Kind::End, "end of input");
        return e;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    void expect(Token::Kind k, const std::string& what)
    {
        if (cur_.kind != k)
            throw ParseError("expected " + what, cur_.offset);
    }

    std::unique_ptr<Expression> expr()
    {
        auto lhs = term();
        while (cur_.kind == Token::Kind::Plus || cur_.kind == Token::Kind::Minus) {
            auto kind = cur_.kind == Token::Kind::Plus ? Expression::Kind::Add : Expression::Kind::Sub;
            advance();
            auto rhs = term();
            auto node = std::make_unique<Expression>();
            node->kind = kind;
            node->lhs = std::move(lhs);
            node->rhs = std::move(rhs);
            lhs = std::move(node);
        }
        return lhs;
    }

    std::unique_ptr<Expression> term()
    {
        auto lhs = factor();
        while (cur_.kind == Token::Kind::Star) {
            advance();
            auto rhs = factor();
            auto node = std::make_unique<Expression>();
            node->kind = Expression::Kind::Mul;
            node->lhs = std::move(lhs);
            node->rhs = std::move(rhs);
            lhs = std::move(node);
        }
        return lhs;
    }

    std::unique_ptr<Expression> factor()
    {
        if (cur_.kind == Token::Kind::Minus) {
            advance();
            auto node = std::make_unique<Expression>();
            node->kind = Expression::Kind::Neg;
            node->lhs = factor();
            return node;
        }
        if (cur_.kind == Token::Kind::Number)
            return rational_literal();
        if (cur_.kind == Token::Kind::Ident)
            return atom();
        if (cur_.kind == Token::Kind::LParen) {
            advance();
            auto e = expr();
            expect(Token::Kind::RParen, "')'");
            advance();
            return e;
        }
        throw ParseError("expected a number, basis atom, or '('", cur_.offset);
    }

    std::unique_ptr<Expression> rational_literal()
    {
        Integer num = cur_.number;
        advance();
        Integer den = 1;
        if (cur_.kind == Token::Kind::Slash) {
            advance();
            expect(Token::Kind::Number, "denominator");
            den = cur_.number;
            if (den.is_zero())
                throw ParseError("zero denominator", cur_.offset);
            advance();
        }
        auto node = std::make_unique<Expression>();
        node->kind = Expression::Kind::Literal;
        node->literal = Rational(num, den);
        return node;
    }

    std::unique_ptr<Expression> atom()
    {
        std::string name = cur_.ident;
        std::size_t name_offset = cur_.offset;
        if (name != "m" && name != "e" && name != "et" && name != "M" && name != "H")
            throw ParseError("unknown basis '" + name + "'", name_offset);
        advance();
        expect(Token::Kind::LBracket, "'['");
        advance();
        std::vector<DottedEntry> entries;
        if (cur_.kind != Token::Kind::RBracket) {
            while (true) {
                bool neg = false;
                if (cur_.kind == Token::Kind::Minus) { // allow e.g. m[-1] to fail with a clear message
                    neg = true;
                    advance();
                }
                expect(Token::Kind::Number, "index entry");
                Integer v = neg ? Integer(-cur_.number) : cur_.number;
                std::size_t entry_offset = cur_.offset;
                advance();
                bool dotted = false;
                if (cur_.kind == Token::Kind::Tilde) {
                    dotted = true;
                    advance();
                }
                if (v < 0 || v > 1000)
                    throw ParseError("index entry out of range", entry_offset);
                entries.push_back({static_cast<int>(v), dotted});
                if (cur_.kind == Token::Kind::Comma) {
                    advance();
                    continue;
                }
                break;
            }
        }
        expect(Token::Kind::RBracket, "']'");
        advance();
        auto node = std::make_unique<Expression>();
        node->kind = Expression::Kind::Atom;
        node->atom_basis = name;
        node->atom_entries = std::move(entries);
        return node;
    }

    Lexer lexer_;
    Token cur_;
};

Value binary(const Value& a, const Value& b, int op) // 0 add, 1 sub, 2 mul
{
    using F = Value::Family;
    // Scalars adapt to the other side's family.
    F fa = a.family, fb = b.family;
    F target;
    if (fa == fb)
        target = fa;
    else if (fa == F::Scalar)
        target = fb;
    else if (fb == F::Scalar)
        target = fa;
    else if ((fa == F::Lambda && fb == F::QSym) || (fa == F::QSym && fb == F::Lambda))
        target = F::QSym;
    else
        throw DomainError("cannot combine H-expressions with m/e/M-expressions");

    switch (target) {
    case F::Scalar: {
        Rational x = a.scalar, y = b.scalar;
        return Value::of_scalar(op == 0 ? Rational(x + y) : op == 1 ? Rational(x - y) : Rational(x * y));
    }
    case F::Lambda: {
        SymSuper x = a.as_sym(), y = b.as_sym();
        return Value::of_sym(op == 0 ? x + y : op == 1 ? x - y : slambda::mul(x, y));
    }
    case F::QSym: {
        QSymSuper x = a.as_qsym(), y = b.as_qsym();
        return Value::of_qsym(op == 0 ? x + y : op == 1 ? x - y : sqsym::mul(x, y));
    }
    case F::NSym: {
        NSymSuper x = a.as_nsym(), y = b.as_nsym();
        return Value::of_nsym(op == 0 ? x + y : op == 1 ? x - y : snsym::mul(x, y));
    }
    }
    throw DomainError("unreachable");
}

Value atom_value(const Expression& e)
{
    if (e.atom_basis == "e" || e.atom_basis == "et") {
        if (e.atom_entries.size() != 1 || e.atom_entries[0].dotted)
            throw DomainError(e.atom_basis + "[...] takes a single undotted index");
        int v = e.atom_entries[0].value;
        return Value::of_sym(e.atom_basis == "e" ? slambda::e(v) : slambda::et(v));
    }
    DottedComposition alpha{e.atom_entries};
    if (!alpha.is_valid())
        throw DomainError("malformed index " + alpha.to_string() +
                          " (undotted entries must be >= 1, dotted >= 0)");
    if (e.atom_basis == "M")
        return Value::of_qsym(sqsym::M(alpha));
    if (e.atom_basis == "H")
        return Value::of_nsym(snsym::H(alpha));
    // m-atom: entries in any order; sort with sign, repeated dotted is an error.
    auto sorted = sort_dotted(alpha);
    if (!sorted)
        throw DomainError("m" + alpha.to_string() + " has a repeated dotted entry");
    SymSuper f;
    f.add(sorted->first, Rational(sorted->second));
    return Value::of_sym(f);
}

} // namespace

std::unique_ptr<Expression> parse_expression(const std::string& src)
{
    Parser p(src);
    return p.parse();
}

Value evaluate(const Expression& e)
{
    switch (e.kind) {
    case Expression::Kind::Literal: return Value::of_scalar(e.literal);
    case Expression::Kind::Atom: return atom_value(e);
    case Expression::Kind::Add: return binary(evaluate(*e.lhs), evaluate(*e.rhs), 0);
    case Expression::Kind::Sub: return binary(evaluate(*e.lhs), evaluate(*e.rhs), 1);
    case Expression::Kind::Mul: return binary(evaluate(*e.lhs), evaluate(*e.rhs), 2);
    case Expression::Kind::Neg: {
        Value v = evaluate(*e.lhs);
        return binary(Value::of_scalar(-1), v, 2);
    }
    }
    throw DomainError("unreachable");
}

Value evaluate_string(const std::string& src) { return evaluate(*parse_expression(src)); }

namespace {

std::string entries_string(const std::vector<DottedEntry>& entries)
{
    std::string s;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(entries[i].value);
        if (entries[i].dotted)
            s += "~";
    }
    return s;
}

// Renders a coefficient-times-monomial term; `mono` empty means the unit.
void append_term(std::string& out, const Rational& c, const std::string& mono)
{
    Rational a = abs(c);
    bool neg = c < 0;
    if (out.empty()) {
        if (neg)
            out += "-";
    } else {
        out += neg ? " - " : " + ";
    }
    if (mono.empty()) {
        out += to_string(a);
        return;
    }
    if (a != 1)
        out += to_string(a) + "*";
    out += mono;
}

} // namespace

std::string render(const SymSuper& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    for (const auto& [sp, c] : f) {
        std::string mono;
        if (!sp.is_empty())
            mono = "m[" + entries_string(DottedComposition::of(sp).entries) + "]";
        append_term(out, c, mono);
    }
    return out;
}

std::string render(const QSymSuper& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    for (const auto& [alpha, c] : f) {
        std::string mono;
        if (alpha.length() > 0)
            mono = "M[" + entries_string(alpha.entries) + "]";
        append_term(out, c, mono);
    }
    return out;
}

std::string render(const NSymSuper& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    for (const auto& [alpha, c] : f) {
        std::string mono;
        if (alpha.length() > 0)
            mono = "H[" + entries_string(alpha.entries) + "]";
        append_term(out, c, mono);
    }
    return out;
}

std::string render(const EPoly& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    for (const auto& [idx, c] : f) {
        std::string mono = idx.to_string();
        if (mono == "1")
            mono.clear();
        append_term(out, c, mono);
    }
    return out;
}

std::string render(const Value& v)
{
    switch (v.family) {
    case Value::Family::Scalar: return to_string(v.scalar);
    case Value::Family::Lambda: return render(v.sym);
    case Value::Family::QSym: return render(v.qsym);
    case Value::Family::NSym: return render(v.nsym);
    }
    return "0";
}

namespace {

template <class Label, class RenderOne>
std::string render_tensor_impl(const LinearCombination<std::vector<Label>>& t, RenderOne render_one)
{
    if (t.is_zero())
        return "0";
    std::string out;
    for (const auto& [word, c] : t) {
        std::string mono;
        for (std::size_t i = 0; i < word.size(); ++i) {
            if (i)
                mono += " (x) ";
            mono += render_one(word[i]);
        }
        append_term(out, c, mono);
    }
    return out;
}

} // namespace

std::string render_tensor(const SymTensor& t)
{
    return render_tensor_impl(t, [](const SuperPartition& sp) {
        return sp.is_empty() ? std::string("1")
                             : "m[" + entries_string(DottedComposition::of(sp).entries) + "]";
    });
}

std::string render_tensor(const QSymTensor& t)
{
    return render_tensor_impl(t, [](const DottedComposition& a) {
        return a.length() == 0 ? std::string("1") : "M[" + entries_string(a.entries) + "]";
    });
}

} // namespace supersym
