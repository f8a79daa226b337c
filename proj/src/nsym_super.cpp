#include "supersym/nsym_super.hpp"

#include <stdexcept>

namespace supersym {
namespace snsym {

NSymSuper H(const DottedComposition& alpha)
{
    if (!alpha.is_valid())
        throw std::invalid_argument("H: malformed dotted composition " + alpha.to_string());
    return NSymSuper(alpha);
}

NSymSuper unit() { return NSymSuper(DottedComposition{}); }

NSymSuper mul(const NSymSuper& f, const NSymSuper& g)
{
    NSymSuper result;
    for (const auto& [a, ca] : f)
        for (const auto& [b, cb] : g)
            result.add(DottedComposition::concat(a, b), ca * cb);
    return result;
}

Rational pair(const NSymSuper& h, const QSymSuper& f)
{
    Rational r = 0;
    for (const auto& [alpha, c] : h)
        r += c * f.coefficient(alpha);
    return r;
}

DualNumber zeta_N(const NSymSuper& f)
{
    DualNumber result;
    for (const auto& [alpha, c] : f) {
        // Product over entries in order in k[eps]: a second eps or any
        // generator with value 0 kills the term.
        DualNumber v = DualNumber::one();
        for (const auto& e : alpha.entries) {
            DualNumber gen = e.dotted ? (e.value == 0 ? DualNumber::eps() : DualNumber{0, 0})
                                      : (e.value == 1 ? DualNumber::one() : DualNumber{0, 0});
            v = v * gen;
            if (v.is_zero())
                break;
        }
        result += c * v;
    }
    return result;
}

} // namespace snsym
} // namespace supersym
