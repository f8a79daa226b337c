#include "supersym/qsym_super.hpp"

#include "supersym/errors.hpp"

#include <algorithm>
#include <map>

namespace supersym {
namespace sqsym {

QSymSuper M(const DottedComposition& alpha)
{
    if (!alpha.is_valid())
        throw std::invalid_argument("M: malformed dotted composition " + alpha.to_string());
    return QSymSuper(alpha);
}

QSymSuper unit() { return QSymSuper(DottedComposition{}); }

int max_length(const QSymSuper& f)
{
    int l = 0;
    for (const auto& [alpha, c] : f)
        l = std::max(l, alpha.length());
    return l;
}

SuperPolynomial realize(const QSymSuper& f, int n_vars)
{
    SuperPolynomial p(n_vars);
    for (const auto& [alpha, c] : f) {
        SuperPolynomial r = realize_M(alpha, n_vars);
        r *= c;
        p += r;
    }
    return p;
}

QSymSuper mul(const QSymSuper& f, const QSymSuper& g)
{
    if (f.is_zero() || g.is_zero())
        return {};
    const int n = max_length(f) + max_length(g);
    SuperPolynomial p = supersym::mul(realize(f, n), realize(g, n));
    return extract_M_expansion(p);
}

QSymTensor coproduct(const QSymSuper& f)
{
    QSymTensor result;
    for (const auto& [alpha, c] : f)
        for (int k = 0; k <= alpha.length(); ++k)
            result.add({alpha.prefix(k), alpha.suffix(k)}, c);
    return result;
}

DualNumber zeta_Q(const QSymSuper& f)
{
    DualNumber d;
    for (const auto& [alpha, c] : f) {
        if (alpha.length() > 1)
            continue;
        if (alpha.fermionic_degree() == 1)
            d.odd += c;
        else
            d.even += c;
    }
    return d;
}

Rational counit(const QSymSuper& f) { return f.coefficient(DottedComposition{}); }

QSymSuper include_lambda(const SymSuper& f)
{
    if (f.is_zero())
        return {};
    const int n = std::max(slambda::max_length(f), 1);
    return extract_M_expansion(slambda::realize(f, n));
}

SymSuper is_symmetric(const QSymSuper& f)
{
    SymSuper result;
    std::map<SuperPartition, std::pair<Rational, long long>> classes; // value, member count
    for (const auto& [alpha, c] : f) {
        auto sorted = sort_dotted(alpha);
        if (!sorted)
            throw NotSymmetric("is_symmetric: repeated-dotted composition " + alpha.to_string() +
                               " has nonzero coefficient");
        const auto& [sp, sign] = *sorted;
        Rational base = sign * c;
        auto [it, inserted] = classes.emplace(sp, std::make_pair(base, 1));
        if (!inserted) {
            if (it->second.first != base)
                throw NotSymmetric("is_symmetric: inconsistent coefficients on class " +
                                   sp.to_string());
            ++it->second.second;
        }
    }
    // Every rearrangement of each class must be present.
    for (const auto& [sp, entry] : classes) {
        std::vector<DottedEntry> entries = DottedComposition::of(sp).entries;
        std::sort(entries.begin(), entries.end());
        long long expected_count = 0;
        do {
            ++expected_count;
        } while (std::next_permutation(entries.begin(), entries.end()));
        if (entry.second != expected_count)
            throw NotSymmetric("is_symmetric: class " + sp.to_string() +
                               " is missing rearrangements");
        result.add(sp, entry.first);
    }
    return result;
}

} // namespace sqsym
} // namespace supersym
