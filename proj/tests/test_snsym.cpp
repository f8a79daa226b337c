#include "supersym/nsym_super.hpp"

#include "supersym/instances.hpp"

#include <doctest.h>

using namespace supersym;
using snsym::H;
using snsym::mul;
using snsym::pair;
using snsym::zeta_N;

namespace {

DottedComposition dc(std::vector<std::pair<int, bool>> entries)
{
    DottedComposition a;
    for (auto [v, d] : entries)
        a.entries.push_back({v, d});
    return a;
}

} // namespace

TEST_CASE("concatenation product")
{
    CHECK(mul(H(dc({{1, false}})), H(dc({{0, true}}))) == H(dc({{1, false}, {0, true}})));
    // Noncommutative: the two orders are distinct basis labels.
    CHECK_FALSE(mul(H(dc({{0, true}})), H(dc({{1, false}}))) ==
                mul(H(dc({{1, false}})), H(dc({{0, true}}))));
    CHECK(mul(snsym::unit(), H(dc({{2, false}}))) == H(dc({{2, false}})));
}

TEST_CASE("pairing with the M basis")
{
    auto a = dc({{1, true}, {2, false}});
    CHECK(pair(H(a), sqsym::M(a)) == 1);
    CHECK(pair(H(a), sqsym::M(dc({{2, false}, {1, true}}))) == 0);

    // Coefficient of M_(2) in e1 * e1 included into sQSym.
    auto e1sq = sqsym::include_lambda(slambda::mul(slambda::e(1), slambda::e(1)));
    CHECK(pair(H(dc({{2, false}})), e1sq) == 1);
}

TEST_CASE("product-coproduct duality")
{
    // (H_a H_b, f) = (H_a (x) H_b, Delta f) on all basis f of n_degree <= 5.
    for (int k = 0; k <= 5; ++k)
        for (const auto& gamma : dotted_compositions_of_degree(k))
            for (int ka = 0; ka <= k; ++ka)
                for (const auto& a : dotted_compositions_of_degree(ka))
                    for (const auto& b : dotted_compositions_of_degree(k - ka)) {
                        Rational lhs = pair(mul(H(a), H(b)), sqsym::M(gamma));
                        Rational rhs = 0;
                        for (const auto& [w, c] : sqsym::coproduct(sqsym::M(gamma)))
                            if (w[0] == a && w[1] == b)
                                rhs += c;
                        CHECK(lhs == rhs);
                    }
}

TEST_CASE("zeta_N")
{
    CHECK(zeta_N(H(dc({{1, false}, {1, false}}))) == DualNumber::one());
    CHECK(zeta_N(H(dc({{1, false}, {0, true}}))) == DualNumber::eps());
    CHECK(zeta_N(H(dc({{0, true}, {0, true}}))).is_zero());
    CHECK(zeta_N(H(dc({{2, false}}))).is_zero());
    CHECK(zeta_N(H(dc({{1, true}}))).is_zero());
    CHECK(zeta_N(snsym::unit()) == DualNumber::one());

    // Multiplicative under concatenation.
    for (int ka = 1; ka <= 2; ++ka)
        for (int kb = 1; kb <= 2; ++kb)
            for (const auto& a : dotted_compositions_of_degree(ka))
                for (const auto& b : dotted_compositions_of_degree(kb))
                    CHECK(zeta_N(mul(H(a), H(b))) == zeta_N(H(a)) * zeta_N(H(b)));
}
