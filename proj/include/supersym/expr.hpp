#pragma once

#include "supersym/nsym_super.hpp"
#include "supersym/qsym_super.hpp"
#include "supersym/rational.hpp"
#include "supersym/sym_super.hpp"

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace supersym {

// Evaluation result of an expression. `*` between basis families resolves by
// conversion to the ambient family: m,e,et live in Lambda; M in sQSym;
// Lambda mixed with sQSym promotes to sQSym; H stays in sNSym and does not
// mix with the others.
struct Value {
    enum class Family { Scalar, Lambda, QSym, NSym };
    Family family = Family::Scalar;
    Rational scalar = 0;
    SymSuper sym;
    QSymSuper qsym;
    NSymSuper nsym;

    static Value of_scalar(Rational c);
    static Value of_sym(SymSuper f);
    static Value of_qsym(QSymSuper f);
    static Value of_nsym(NSymSuper f);

    // Conversions; throw DomainError when impossible.
    SymSuper as_sym() const;
    QSymSuper as_qsym() const;
    NSymSuper as_nsym() const;

    bool is_zero() const;
};

// Abstract syntax: literals, basis atoms, +, -, *, parentheses.
struct Expression {
    enum class Kind { Literal, Atom, Add, Sub, Mul, Neg };
    Kind kind = Kind::Literal;
    Rational literal = 0;
    std::string atom_basis;           // "m", "e", "et", "M", "H"
    std::vector<DottedEntry> atom_entries;
    std::unique_ptr<Expression> lhs, rhs;
};

// Recursive-descent parser; errors carry byte offsets (ParseError).
std::unique_ptr<Expression> parse_expression(const std::string& src);

Value evaluate(const Expression& expr);
Value evaluate_string(const std::string& src);

// Deterministic renderings; every output re-parses to the same value.
std::string render(const SymSuper& f);
std::string render(const QSymSuper& f);
std::string render(const NSymSuper& f);
std::string render(const EPoly& f);
std::string render(const Value& v);
std::string render_tensor(const SymTensor& t);
std::string render_tensor(const QSymTensor& t);

} // namespace supersym
