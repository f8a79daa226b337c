#include "supersym/qsym_super.hpp"

#include "supersym/errors.hpp"
#include "supersym/hopf.hpp"
#include "supersym/instances.hpp"
#include "supersym/nsym_super.hpp"

#include <doctest.h>

using namespace supersym;
using sqsym::M;
using sqsym::coproduct;
using sqsym::include_lambda;
using sqsym::is_symmetric;
using sqsym::mul;
using sqsym::unit;
using sqsym::zeta_Q;

namespace {

DottedComposition dc(std::vector<std::pair<int, bool>> entries)
{
    DottedComposition a;
    for (auto [v, d] : entries)
        a.entries.push_back({v, d});
    return a;
}

} // namespace

TEST_CASE("M basis labels")
{
    CHECK(M(dc({{1, false}})) == QSymSuper(dc({{1, false}})));
    CHECK(M(dc({{0, true}})) == QSymSuper(dc({{0, true}})));
    // Repeated dotted values are a legal basis label.
    CHECK(M(dc({{1, true}, {1, true}})) == QSymSuper(dc({{1, true}, {1, true}})));
    CHECK_THROWS_AS(M(dc({{0, false}})), std::invalid_argument);
}

TEST_CASE("products via the realization oracle")
{
    auto m1 = M(dc({{1, false}}));
    CHECK(mul(m1, m1) ==
          Rational(2) * M(dc({{1, false}, {1, false}})) + M(dc({{2, false}})));

    auto m0d = M(dc({{0, true}}));
    CHECK(mul(m0d, m0d).is_zero());

    CHECK(mul(m0d, m1) == M(dc({{0, true}, {1, false}})) + M(dc({{1, false}, {0, true}})) +
                              M(dc({{1, true}})));
}

TEST_CASE("product truncation stability")
{
    for (int ka = 1; ka <= 2; ++ka)
        for (int kb = 1; ka + kb <= 4; ++kb)
            for (const auto& a : dotted_compositions_of_degree(ka))
                for (const auto& b : dotted_compositions_of_degree(kb)) {
                    int n = a.length() + b.length();
                    auto at_n = mul(M(a), M(b));
                    auto p = supersym::mul(sqsym::realize(M(a), n + 1),
                                           sqsym::realize(M(b), n + 1));
                    CHECK(at_n == extract_M_expansion(p));
                }
}

TEST_CASE("deconcatenation coproduct")
{
    auto a = dc({{2, true}, {1, false}});
    QSymTensor expected;
    expected.add({a, dc({})}, 1);
    expected.add({dc({{2, true}}), dc({{1, false}})}, 1);
    expected.add({dc({}), a}, 1);
    CHECK(coproduct(M(a)) == expected);

    QSymTensor unit_delta;
    unit_delta.add({dc({}), dc({})}, 1);
    CHECK(coproduct(unit()) == unit_delta);

    // Deconcatenation only: witnesses non-cocommutativity.
    auto ab = dc({{1, false}, {2, false}});
    auto delta = coproduct(M(ab));
    CHECK(delta.coefficient({dc({{1, false}}), dc({{2, false}})}) == 1);
    CHECK(delta.coefficient({dc({{2, false}}), dc({{1, false}})}) == 0);
}

TEST_CASE("zeta_Q")
{
    CHECK(zeta_Q(M(dc({{3, false}}))) == DualNumber::one());
    CHECK(zeta_Q(M(dc({{0, true}}))) == DualNumber::eps());
    CHECK(zeta_Q(M(dc({{1, false}, {2, false}}))).is_zero());

    // Agrees with specializing the realization.
    for (int k = 0; k <= 5; ++k)
        for (const auto& a : dotted_compositions_of_degree(k)) {
            int n = std::max(1, a.length());
            CHECK(zeta_Q(M(a)) == specialize_point(realize_M(a, n)));
        }
}

TEST_CASE("zeta_Q is an even multiplicative map")
{
    for (int ka = 1; ka <= 2; ++ka)
        for (int kb = 1; ka + kb <= 4; ++kb)
            for (const auto& a : dotted_compositions_of_degree(ka))
                for (const auto& b : dotted_compositions_of_degree(kb)) {
                    DualNumber za = zeta_Q(M(a));
                    if (a.parity())
                        CHECK(za.even.is_zero());
                    else
                        CHECK(za.odd.is_zero());
                    CHECK(zeta_Q(mul(M(a), M(b))) == za * zeta_Q(M(b)));
                }
}

TEST_CASE("inclusion of Lambda")
{
    CHECK(include_lambda(slambda::et(1)) ==
          M(dc({{0, true}, {1, false}})) + M(dc({{1, false}, {0, true}})));

    CHECK(include_lambda(slambda::m(SuperPartition{{2, 1}, {}})) ==
          M(dc({{2, true}, {1, true}})) - M(dc({{1, true}, {2, true}})));

    CHECK_THROWS_AS(is_symmetric(M(dc({{1, false}, {2, false}}))), NotSymmetric);

    // Round trip through the inclusion on every small basis element.
    for (int k = 0; k <= 5; ++k)
        for (const auto& sp : superpartitions_of_degree(k))
            CHECK(is_symmetric(include_lambda(slambda::m(sp))) == slambda::m(sp));
}

TEST_CASE("inclusion is an algebra and coalgebra morphism (sampled)")
{
    for (int ka = 1; ka <= 2; ++ka)
        for (int kb = 1; ka + kb <= 4; ++kb)
            for (const auto& a : superpartitions_of_degree(ka))
                for (const auto& b : superpartitions_of_degree(kb)) {
                    auto lhs = include_lambda(slambda::mul(slambda::m(a), slambda::m(b)));
                    auto rhs = mul(include_lambda(slambda::m(a)), include_lambda(slambda::m(b)));
                    CHECK(lhs == rhs);
                }

    for (int k = 0; k <= 4; ++k)
        for (const auto& a : superpartitions_of_degree(k)) {
            QSymTensor lhs;
            for (const auto& [w, c] : slambda::coproduct(slambda::m(a)))
                for (const auto& [l, cl] : include_lambda(slambda::m(w[0])))
                    for (const auto& [r, cr] : include_lambda(slambda::m(w[1])))
                        lhs.add({l, r}, c * cl * cr);
            QSymTensor rhs;
            for (const auto& [alpha, c] : include_lambda(slambda::m(a))) {
                auto d = coproduct(M(alpha));
                d *= c;
                rhs += d;
            }
            CHECK(lhs == rhs);
        }
}

TEST_CASE("antipode on sQSym")
{
    const auto& inst = qsym_instance();
    CHECK(hopf::antipode(inst, M(dc({{1, false}}))) == -M(dc({{1, false}})));
    CHECK(hopf::antipode(inst, M(dc({{0, true}}))) == -M(dc({{0, true}})));

    // mu (S x id) Delta kills positive degree.
    auto a = dc({{1, false}, {1, false}});
    hopf::Element<DottedComposition> conv;
    for (const auto& [w, c] : inst.coproduct(a)) {
        auto s = hopf::antipode(inst, hopf::Element<DottedComposition>(w[0]));
        s *= c;
        conv += hopf::element_product(inst, s, hopf::Element<DottedComposition>(w[1]));
    }
    CHECK(conv.is_zero());
}

TEST_CASE("duality with the H functionals")
{
    // For homogeneous f in sQSym^k: even part of zeta_Q is (H_(k), f); the
    // eps part is (H_(k-1 dotted), f).
    for (int k = 1; k <= 5; ++k)
        for (const auto& a : dotted_compositions_of_degree(k)) {
            auto f = M(a);
            DualNumber z = zeta_Q(f);
            NSymSuper hk = snsym::H(dc({{k, false}}));
            NSymSuper hkd = snsym::H(dc({{k - 1, true}}));
            CHECK(z.even == snsym::pair(hk, f));
            CHECK(z.odd == snsym::pair(hkd, f));
        }
}
