#pragma once

#include "supersym/combinatorics.hpp"
#include "supersym/dual_number.hpp"
#include "supersym/errors.hpp"
#include "supersym/linear_combination.hpp"
#include "supersym/qsym_super.hpp"
#include "supersym/sym_super.hpp"

#include <concepts>
#include <map>
#include <string>
#include <vector>

namespace supersym {
namespace hopf {

template <class L>
using Element = LinearCombination<L>;
template <class L>
using Tensor = LinearCombination<std::vector<L>>;

// A connected graded Hopf superalgebra presented on a homogeneous basis,
// together with a supercharacter into k[eps].
template <class I>
concept Instance = requires(const I& inst, const typename I::Label& a, const typename I::Label& b, int k) {
    typename I::Label;
    { inst.unit() } -> std::same_as<typename I::Label>;
    { inst.n_degree(a) } -> std::convertible_to<int>;
    { inst.parity(a) } -> std::convertible_to<int>;
    { inst.basis(k) } -> std::same_as<std::vector<typename I::Label>>;
    { inst.product(a, b) } -> std::same_as<Element<typename I::Label>>;
    { inst.coproduct(a) } -> std::same_as<Tensor<typename I::Label>>;
    { inst.zeta(a) } -> std::same_as<DualNumber>;
    { inst.render(a) } -> std::convertible_to<std::string>;
};

template <class I>
Element<typename I::Label> element_product(const I& inst, const Element<typename I::Label>& f,
                                           const Element<typename I::Label>& g)
{
    Element<typename I::Label> r;
    for (const auto& [a, ca] : f)
        for (const auto& [b, cb] : g) {
            auto p = inst.product(a, b);
            p *= ca * cb;
            r += p;
        }
    return r;
}

// Componentwise product of arity-l tensors with the Koszul sign
// (-1)^{sum_{i<j} |b_i| |a_j|}.
template <class I>
Tensor<typename I::Label> tensor_product(const I& inst, const Tensor<typename I::Label>& s,
                                         const Tensor<typename I::Label>& t)
{
    Tensor<typename I::Label> r;
    for (const auto& [a, ca] : s)
        for (const auto& [b, cb] : t) {
            int sign_exp = 0;
            for (std::size_t i = 0; i < b.size(); ++i)
                for (std::size_t j = i + 1; j < a.size(); ++j)
                    sign_exp += inst.parity(b[i]) * inst.parity(a[j]);
            Rational coeff = ca * cb;
            if (sign_exp & 1)
                coeff = -coeff;
            // Running expansion over slots.
            Tensor<typename I::Label> partial;
            partial.add({}, coeff);
            for (std::size_t slot = 0; slot < a.size(); ++slot) {
                auto prod = inst.product(a[slot], b[slot]);
                Tensor<typename I::Label> next;
                for (const auto& [prefix, pc] : partial)
                    for (const auto& [l, lc] : prod) {
                        auto ext = prefix;
                        ext.push_back(l);
                        next.add(ext, pc * lc);
                    }
                partial = std::move(next);
            }
            r += partial;
        }
    return r;
}

template <class I>
Rational counit(const I& inst, const Element<typename I::Label>& f)
{
    return f.coefficient(inst.unit());
}

// Delta^{(l-1)}: arity-l iterated coproduct (Delta^{(0)} is the identity),
// expanding the leftmost slot at each step.
template <class I>
Tensor<typename I::Label> iterated_coproduct(const I& inst, const Element<typename I::Label>& f, int arity)
{
    if (arity < 1)
        throw std::invalid_argument("iterated_coproduct: arity must be >= 1");
    Tensor<typename I::Label> cur;
    for (const auto& [a, c] : f)
        cur.add({a}, c);
    for (int step = 1; step < arity; ++step) {
        Tensor<typename I::Label> next;
        for (const auto& [word, c] : cur) {
            auto delta = inst.coproduct(word[0]);
            for (const auto& [pair_word, pc] : delta) {
                std::vector<typename I::Label> w;
                w.reserve(word.size() + 1);
                w.push_back(pair_word[0]);
                w.push_back(pair_word[1]);
                w.insert(w.end(), word.begin() + 1, word.end());
                next.add(w, c * pc);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

// Scalar part of zeta on a slot of prescribed parity.
template <class I>
Rational zeta_scalar(const I& inst, const typename I::Label& a, int slot_parity)
{
    DualNumber z = inst.zeta(a);
    return slot_parity ? z.odd : z.even;
}

// zeta_alpha: iterated coproduct, projection of slot i to the homogeneous
// component of n_degree alpha_i + eta_i and parity eta_i, then the scalar
// part of zeta on each slot.
template <class I>
Rational zeta_alpha(const I& inst, const Element<typename I::Label>& f, const DottedComposition& alpha)
{
    int fdeg = -1;
    for (const auto& [a, c] : f) {
        int d = inst.n_degree(a);
        if (fdeg == -1)
            fdeg = d;
        else if (fdeg != d)
            throw DomainError("zeta_alpha: input is not homogeneous");
    }
    if (fdeg == -1)
        return 0;
    if (alpha.n_degree() != fdeg)
        throw DomainError("zeta_alpha: degree mismatch between element and composition");
    const int l = std::max(alpha.length(), 1);
    auto t = iterated_coproduct(inst, f, l);
    Rational total = 0;
    for (const auto& [word, c] : t) {
        Rational term = c;
        for (int i = 0; i < alpha.length() && !term.is_zero(); ++i) {
            const auto& e = alpha.entries[i];
            int slot_degree = e.weight();
            int slot_parity = e.dotted ? 1 : 0;
            if (inst.n_degree(word[i]) != slot_degree || inst.parity(word[i]) != slot_parity) {
                term = 0;
                break;
            }
            term *= zeta_scalar(inst, word[i], slot_parity);
        }
        if (alpha.length() == 0)
            term *= counit(inst, Element<typename I::Label>(word[0]));
        total += term;
    }
    return total;
}

namespace detail {

template <class I>
std::map<std::pair<int, int>, Element<typename I::Label>>
split_homogeneous(const I& inst, const Element<typename I::Label>& f)
{
    std::map<std::pair<int, int>, Element<typename I::Label>> parts;
    for (const auto& [a, c] : f)
        parts[{inst.n_degree(a), inst.parity(a)}].add(a, c);
    return parts;
}

// All zeta_alpha coefficients of one homogeneous element at once: bucket the
// iterated-coproduct terms by their slot degree/parity profile.
template <class I>
std::map<DottedComposition, Rational> zeta_alpha_table(const I& inst,
                                                       const Element<typename I::Label>& f, int degree)
{
    std::map<DottedComposition, Rational> table;
    if (degree == 0) {
        table[DottedComposition{}] = counit(inst, f);
        return table;
    }
    for (int l = 1; l <= degree; ++l) {
        auto t = iterated_coproduct(inst, f, l);
        for (const auto& [word, c] : t) {
            DottedComposition alpha;
            alpha.entries.reserve(l);
            Rational term = c;
            bool ok = true;
            for (const auto& a : word) {
                int d = inst.n_degree(a);
                int p = inst.parity(a);
                if (d - p < 0 || d == 0) { // each slot must have positive degree
                    ok = false;
                    break;
                }
                alpha.entries.push_back({d - p, p != 0});
                term *= zeta_scalar(inst, a, p);
                if (term.is_zero()) {
                    ok = false;
                    break;
                }
            }
            if (ok && alpha.length() == l)
                table[alpha] += term;
        }
    }
    return table;
}

} // namespace detail

// Psi(a) = sum over dotted compositions of k of zeta_alpha(a) M_alpha.
template <class I>
QSymSuper psi_to_sqsym(const I& inst, const Element<typename I::Label>& f)
{
    QSymSuper result;
    for (const auto& [deg_par, part] : detail::split_homogeneous(inst, f)) {
        auto table = detail::zeta_alpha_table(inst, part, deg_par.first);
        for (const auto& [alpha, c] : table)
            result.add(alpha, c);
    }
    return result;
}

// Psi(a) = sum over superpartitions of k of zeta_Lambda(a) m_Lambda, with
// zeta_Lambda read at the canonical rearrangement. Cross-checked against
// symmetrizing psi_to_sqsym; a non-symmetric image signals a
// non-cocommutative instance.
template <class I>
SymSuper psi_to_lambda(const I& inst, const Element<typename I::Label>& f)
{
    SymSuper result;
    QSymSuper via_q;
    for (const auto& [deg_par, part] : detail::split_homogeneous(inst, f)) {
        auto table = detail::zeta_alpha_table(inst, part, deg_par.first);
        for (const auto& [alpha, c] : table)
            via_q.add(alpha, c);
        for (const auto& sp : superpartitions_of_degree(deg_par.first)) {
            auto it = table.find(DottedComposition::of(sp));
            if (it != table.end())
                result.add(sp, it->second);
        }
    }
    SymSuper symmetrized = sqsym::is_symmetric(via_q); // throws if not symmetric
    if (!(symmetrized == result))
        throw DomainError("psi_to_lambda: coefficient routes disagree");
    return result;
}

// Antipode by the reduced-coproduct recursion:
// S(a) = -a - sum S(a') a'' over legs of positive degree.
template <class I>
class Antipode {
public:
    explicit Antipode(const I& inst) : inst_(inst) {}

    Element<typename I::Label> operator()(const Element<typename I::Label>& f)
    {
        Element<typename I::Label> r;
        for (const auto& [a, c] : f) {
            auto s = of_label(a);
            s *= c;
            r += s;
        }
        return r;
    }

private:
    Element<typename I::Label> of_label(const typename I::Label& a)
    {
        if (inst_.n_degree(a) == 0)
            return Element<typename I::Label>(a);
        auto it = memo_.find(a);
        if (it != memo_.end())
            return it->second;
        Element<typename I::Label> s(a, -1);
        for (const auto& [word, c] : inst_.coproduct(a)) {
            if (inst_.n_degree(word[0]) == 0 || inst_.n_degree(word[1]) == 0)
                continue;
            auto left = of_label(word[0]);
            left *= -c;
            s += element_product(inst_, left, Element<typename I::Label>(word[1]));
        }
        memo_.emplace(a, s);
        return s;
    }

    const I& inst_;
    std::map<typename I::Label, Element<typename I::Label>> memo_;
};

template <class I>
Element<typename I::Label> antipode(const I& inst, const Element<typename I::Label>& f)
{
    Antipode<I> s(inst);
    return s(f);
}

struct CheckResult {
    std::string name;
    bool pass = true;
    long long cases = 0;
    std::string witness; // first failure, if any
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool cocommutative = true;
    std::string cocommutative_witness;

    bool all_pass() const
    {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
};

// Degree-by-degree mechanical verification of the Hopf-superalgebra and
// supercharacter axioms on basis elements up to max_degree.
template <class I>
VerifyReport verify_hopf(const I& inst, int max_degree)
{
    using L = typename I::Label;
    VerifyReport report;
    CheckResult coassoc{"coassociativity"};
    CheckResult counit_law{"counit laws"};
    CheckResult antipode_law{"antipode convolution"};
    CheckResult delta_mult{"coproduct multiplicativity (Koszul)"};
    CheckResult grading{"grading/parity additivity"};
    CheckResult zeta_even{"zeta evenness"};
    CheckResult zeta_mult{"zeta multiplicativity"};

    Antipode<I> S(inst);
    const L one = inst.unit();

    auto fail = [&](CheckResult& c, const std::string& witness) {
        if (c.pass) {
            c.pass = false;
            c.witness = witness;
        }
    };

    for (int k = 0; k <= max_degree; ++k) {
        for (const L& a : inst.basis(k)) {
            Element<L> ea(a);
            auto delta = inst.coproduct(a);

            // Coassociativity via arity-3 bracketing both ways.
            {
                ++coassoc.cases;
                Tensor<L> left; // (Delta x id) Delta
                for (const auto& [w, c] : delta)
                    for (const auto& [w2, c2] : inst.coproduct(w[0]))
                        left.add({w2[0], w2[1], w[1]}, c * c2);
                Tensor<L> right; // (id x Delta) Delta
                for (const auto& [w, c] : delta)
                    for (const auto& [w2, c2] : inst.coproduct(w[1]))
                        right.add({w[0], w2[0], w2[1]}, c * c2);
                if (!(left == right))
                    fail(coassoc, inst.render(a));
            }

            // Counit laws.
            {
                ++counit_law.cases;
                Element<L> left, right;
                for (const auto& [w, c] : delta) {
                    if (w[0] == one)
                        right.add(w[1], c);
                    else if (inst.n_degree(w[0]) == 0)
                        fail(grading, "degree-0 non-unit label in coproduct of " + inst.render(a));
                    if (w[1] == one)
                        left.add(w[0], c);
                }
                if (!(left == ea) || !(right == ea))
                    fail(counit_law, inst.render(a));
            }

            // Antipode convolution identities.
            {
                ++antipode_law.cases;
                Element<L> conv_left, conv_right;
                for (const auto& [w, c] : delta) {
                    auto sl = S(Element<L>(w[0]));
                    sl *= c;
                    conv_left += element_product(inst, sl, Element<L>(w[1]));
                    auto sr = S(Element<L>(w[1]));
                    sr *= c;
                    conv_right += element_product(inst, Element<L>(w[0]), sr);
                }
                Element<L> expected;
                if (k == 0)
                    expected = Element<L>(one);
                if (!(conv_left == expected) || !(conv_right == expected))
                    fail(antipode_law, inst.render(a));
            }

            // Coproduct grading: slot degrees/parities must sum correctly.
            {
                ++grading.cases;
                for (const auto& [w, c] : delta) {
                    if (inst.n_degree(w[0]) + inst.n_degree(w[1]) != k ||
                        ((inst.parity(w[0]) + inst.parity(w[1])) & 1) != inst.parity(a))
                        fail(grading, inst.render(a));
                }
            }

            // Supercharacter evenness.
            {
                ++zeta_even.cases;
                DualNumber z = inst.zeta(a);
                bool ok = inst.parity(a) ? z.even.is_zero() : z.odd.is_zero();
                if (!ok)
                    fail(zeta_even, inst.render(a));
            }

            // Cocommutativity flag: tau Delta = Delta with the Koszul sign.
            {
                Tensor<L> flipped;
                for (const auto& [w, c] : delta) {
                    int sign = (inst.parity(w[0]) & inst.parity(w[1])) ? -1 : 1;
                    flipped.add({w[1], w[0]}, sign * c);
                }
                if (report.cocommutative && !(flipped == delta)) {
                    report.cocommutative = false;
                    report.cocommutative_witness = inst.render(a);
                }
            }

            // Pairwise checks against elements of complementary degree.
            for (int k2 = 0; k + k2 <= max_degree; ++k2) {
                for (const L& b : inst.basis(k2)) {
                    Element<L> eb(b);
                    auto ab = inst.product(a, b);

                    ++grading.cases;
                    for (const auto& [l, c] : ab)
                        if (inst.n_degree(l) != k + k2 ||
                            inst.parity(l) != ((inst.parity(a) + inst.parity(b)) & 1))
                            fail(grading, inst.render(a) + " * " + inst.render(b));

                    ++delta_mult.cases;
                    Tensor<L> delta_ab;
                    for (const auto& [l, c] : ab) {
                        auto d = inst.coproduct(l);
                        d *= c;
                        delta_ab += d;
                    }
                    auto rhs = tensor_product(inst, delta, inst.coproduct(b));
                    if (!(delta_ab == rhs))
                        fail(delta_mult, inst.render(a) + " * " + inst.render(b));

                    ++zeta_mult.cases;
                    DualNumber za = inst.zeta(a), zb = inst.zeta(b);
                    DualNumber zab;
                    for (const auto& [l, c] : ab)
                        zab += c * inst.zeta(l);
                    if (!(zab == za * zb))
                        fail(zeta_mult, inst.render(a) + " * " + inst.render(b));
                }
            }
        }
    }

    report.checks = {coassoc, counit_law, antipode_law, delta_mult, grading, zeta_even, zeta_mult};
    return report;
}

} // namespace hopf
} // namespace supersym
