#include "supersym/combinatorics.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace supersym;

namespace {

// Independent enumeration oracle: build every sorted part list whose weight
// fits the budget, then pair and filter by exact degree.
void oracle_strict(int budget, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    out.push_back(cur);
    int hi = cur.empty() ? budget : std::min(budget, cur.back() - 1);
    for (int v = hi; v >= 0; --v) {
        if (v + 1 > budget) // each dotted part costs value + 1 in n_degree
            continue;
        cur.push_back(v);
        oracle_strict(budget - v - 1, cur, out);
        cur.pop_back();
    }
}

void oracle_weak(int budget, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    out.push_back(cur);
    int hi = cur.empty() ? budget : std::min(budget, cur.back());
    for (int v = hi; v >= 1; --v) {
        cur.push_back(v);
        oracle_weak(budget - v, cur, out);
        cur.pop_back();
    }
}

std::set<SuperPartition> oracle_superpartitions(int k)
{
    std::vector<std::vector<int>> ds, ps;
    std::vector<int> cur;
    oracle_strict(k, cur, ds);
    oracle_weak(k, cur, ps);
    std::set<SuperPartition> out;
    for (const auto& d : ds)
        for (const auto& p : ps) {
            SuperPartition sp{d, p};
            if (sp.is_valid() && sp.n_degree() == k)
                out.insert(sp);
        }
    return out;
}

} // namespace

TEST_CASE("superpartition degrees")
{
    SuperPartition sp{{2, 0}, {3, 1, 1}};
    CHECK(sp.total_degree() == 7);
    CHECK(sp.fermionic_degree() == 2);
    CHECK(sp.n_degree() == 9);
    CHECK(sp.length() == 5);
    CHECK(sp.is_valid());
    CHECK(sp.to_string() == "(2,0;3,1,1)");

    CHECK_FALSE(SuperPartition{{1, 1}, {}}.is_valid()); // repeated dotted
    CHECK_FALSE(SuperPartition{{}, {0}}.is_valid());    // zero plain part
    CHECK_FALSE(SuperPartition{{0, 1}, {}}.is_valid()); // increasing dotted
}

TEST_CASE("superpartitions_of_degree small cases")
{
    auto d0 = superpartitions_of_degree(0);
    REQUIRE(d0.size() == 1);
    CHECK(d0[0] == SuperPartition{});

    auto d1 = superpartitions_of_degree(1);
    REQUIRE(d1.size() == 2);
    CHECK(d1[0] == SuperPartition{{}, {1}});
    CHECK(d1[1] == SuperPartition{{0}, {}});

    auto d3 = superpartitions_of_degree(3);
    CHECK(d3.size() == 8);
    CHECK(std::find(d3.begin(), d3.end(), SuperPartition{{1, 0}, {}}) != d3.end());
}

TEST_CASE("superpartition enumeration matches the brute-force oracle")
{
    for (int k = 0; k <= 8; ++k) {
        auto fast = superpartitions_of_degree(k);
        auto slow = oracle_superpartitions(k);
        REQUIRE(fast.size() == slow.size());
        std::set<SuperPartition> seen;
        for (const auto& sp : fast) {
            CHECK(sp.n_degree() == k);
            CHECK(sp.is_valid());
            CHECK(seen.insert(sp).second); // no duplicates
            CHECK(slow.count(sp) == 1);
        }
        CHECK(std::is_sorted(fast.begin(), fast.end()));
        CHECK(fast == superpartitions_of_degree(k)); // re-run is identical
    }
}

TEST_CASE("dotted composition degrees and counts")
{
    DottedComposition alpha{{{1, true}, {0, true}, {3, false}}};
    CHECK(alpha.total_degree() == 4);
    CHECK(alpha.fermionic_degree() == 2);
    CHECK(alpha.n_degree() == 6);
    CHECK(alpha.eta() == std::vector<int>{1, 1, 0});
    CHECK(alpha.to_string() == "[1~,0~,3]");

    auto d0 = dotted_compositions_of_degree(0);
    REQUIRE(d0.size() == 1);
    CHECK(d0[0].length() == 0);

    auto d1 = dotted_compositions_of_degree(1);
    REQUIRE(d1.size() == 2);
    CHECK(std::find(d1.begin(), d1.end(), DottedComposition{{{1, false}}}) != d1.end());
    CHECK(std::find(d1.begin(), d1.end(), DottedComposition{{{0, true}}}) != d1.end());

    CHECK(dotted_compositions_of_degree(4).size() == 54);

    // c(k) = 2 * 3^(k-1), checked against the first-entry recurrence.
    long long expected = 1; // c(0)
    long long running_sum = 1;
    for (int k = 1; k <= 8; ++k) {
        expected = 2 * running_sum;
        auto all = dotted_compositions_of_degree(k);
        CHECK(static_cast<long long>(all.size()) == expected);
        std::set<DottedComposition> seen;
        for (const auto& a : all) {
            CHECK(a.n_degree() == k);
            CHECK(a.is_valid());
            CHECK(seen.insert(a).second);
        }
        running_sum += expected;
    }
}

TEST_CASE("sort_dotted")
{
    // Already sorted: sign +1.
    DottedComposition a{{{0, true}, {1, false}}};
    auto r = sort_dotted(a);
    REQUIRE(r.has_value());
    CHECK(r->first == SuperPartition{{0}, {1}});
    CHECK(r->second == 1);

    // One transposition of two odd entries.
    DottedComposition b{{{1, true}, {2, true}}};
    r = sort_dotted(b);
    REQUIRE(r.has_value());
    CHECK(r->first == SuperPartition{{2, 1}, {}});
    CHECK(r->second == -1);

    // Repeated dotted value matches no superpartition.
    DottedComposition c{{{1, true}, {1, true}}};
    CHECK_FALSE(sort_dotted(c).has_value());

    // sign^2 = 1 and sorted-input sign is +1 across a sweep.
    for (int k = 0; k <= 6; ++k)
        for (const auto& alpha : dotted_compositions_of_degree(k)) {
            auto s = sort_dotted(alpha);
            if (!s)
                continue;
            CHECK((s->second == 1 || s->second == -1));
            auto resorted = sort_dotted(DottedComposition::of(s->first));
            REQUIRE(resorted.has_value());
            CHECK(resorted->second == 1);
            CHECK(resorted->first == s->first);
        }
}

TEST_CASE("aut_count")
{
    CHECK(aut_count({1, 1, 1}) == 6);
    CHECK(aut_count({2, 1}) == 1);
    CHECK(aut_count({2, 2, 1}) == 2);
    CHECK(aut_count({}) == 1);
    CHECK(aut_count({3, 3, 3, 2, 2, 1}) == 12);
}
