#include "supersym/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace supersym {

int SuperPartition::total_degree() const
{
    return std::accumulate(dotted.begin(), dotted.end(), 0) +
           std::accumulate(plain.begin(), plain.end(), 0);
}

bool SuperPartition::is_valid() const
{
    for (std::size_t i = 0; i < dotted.size(); ++i) {
        if (dotted[i] < 0)
            return false;
        if (i > 0 && dotted[i - 1] <= dotted[i])
            return false;
    }
    for (std::size_t i = 0; i < plain.size(); ++i) {
        if (plain[i] < 1)
            return false;
        if (i > 0 && plain[i - 1] < plain[i])
            return false;
    }
    return true;
}

bool SuperPartition::operator<(const SuperPartition& o) const
{
    return std::make_tuple(n_degree(), fermionic_degree(), std::cref(dotted), std::cref(plain)) <
           std::make_tuple(o.n_degree(), o.fermionic_degree(), std::cref(o.dotted), std::cref(o.plain));
}

std::string SuperPartition::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < dotted.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(dotted[i]);
    }
    s += ";";
    for (std::size_t i = 0; i < plain.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(plain[i]);
    }
    s += ")";
    return s;
}

int DottedComposition::total_degree() const
{
    int t = 0;
    for (const auto& e : entries)
        t += e.value;
    return t;
}

int DottedComposition::fermionic_degree() const
{
    int m = 0;
    for (const auto& e : entries)
        m += e.dotted ? 1 : 0;
    return m;
}

int DottedComposition::n_degree() const { return total_degree() + fermionic_degree(); }

bool DottedComposition::is_valid() const
{
    for (const auto& e : entries) {
        if (e.dotted ? e.value < 0 : e.value < 1)
            return false;
    }
    return true;
}

std::vector<int> DottedComposition::eta() const
{
    std::vector<int> v(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        v[i] = entries[i].dotted ? 1 : 0;
    return v;
}

bool DottedComposition::operator<(const DottedComposition& o) const
{
    return std::make_tuple(n_degree(), length(), std::cref(entries)) <
           std::make_tuple(o.n_degree(), o.length(), std::cref(o.entries));
}

std::string DottedComposition::to_string() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(entries[i].value);
        if (entries[i].dotted)
            s += "~";
    }
    s += "]";
    return s;
}

DottedComposition DottedComposition::concat(const DottedComposition& a, const DottedComposition& b)
{
    DottedComposition r = a;
    r.entries.insert(r.entries.end(), b.entries.begin(), b.entries.end());
    return r;
}

DottedComposition DottedComposition::prefix(int k) const
{
    DottedComposition r;
    r.entries.assign(entries.begin(), entries.begin() + k);
    return r;
}

DottedComposition DottedComposition::suffix(int k) const
{
    DottedComposition r;
    r.entries.assign(entries.begin() + k, entries.end());
    return r;
}

DottedComposition DottedComposition::of(const SuperPartition& sp)
{
    DottedComposition r;
    r.entries.reserve(sp.dotted.size() + sp.plain.size());
    for (int d : sp.dotted)
        r.entries.push_back({d, true});
    for (int p : sp.plain)
        r.entries.push_back({p, false});
    return r;
}

namespace {

// Strictly decreasing lists of distinct values >= 0 with given length and sum,
// all values < bound.
void strict_lists(int sum, int len, int bound, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out)
{
    if (len == 0) {
        if (sum == 0)
            out.push_back(cur);
        return;
    }
    // Remaining len values are distinct, below v, so their sum is at least
    // 0+1+...+(len-2) after choosing v; prune accordingly.
    for (int v = len - 1; v < bound && v <= sum - (len - 1) * (len - 2) / 2; ++v) {
        if (v > sum)
            break;
        cur.push_back(v);
        strict_lists(sum - v, len - 1, v, cur, out);
        cur.pop_back();
    }
}

// Weakly decreasing lists of values in [1, max_part] with given sum.
void partitions(int sum, int max_part, std::vector<int>& cur,
                std::vector<std::vector<int>>& out)
{
    if (sum == 0) {
        out.push_back(cur);
        return;
    }
    for (int v = std::min(sum, max_part); v >= 1; --v) {
        cur.push_back(v);
        partitions(sum - v, v, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<SuperPartition> superpartitions_of_degree(int k)
{
    std::vector<SuperPartition> result;
    for (int m = 0; m * (m - 1) / 2 + m <= k; ++m) {
        int rest = k - m; // total degree budget
        for (int d = m * (m - 1) / 2; d <= rest; ++d) {
            std::vector<std::vector<int>> ds;
            std::vector<int> cur;
            strict_lists(d, m, d + 1, cur, ds);
            std::vector<std::vector<int>> ps;
            partitions(rest - d, rest - d, cur, ps);
            for (const auto& dl : ds)
                for (const auto& pl : ps)
                    result.push_back(SuperPartition{dl, pl});
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

namespace {

void compositions_rec(int remaining, DottedComposition& cur, std::vector<DottedComposition>& out)
{
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int w = 1; w <= remaining; ++w) {
        cur.entries.push_back({w, false});
        compositions_rec(remaining - w, cur, out);
        cur.entries.back() = {w - 1, true};
        compositions_rec(remaining - w, cur, out);
        cur.entries.pop_back();
    }
}

} // namespace

std::vector<DottedComposition> dotted_compositions_of_degree(int k)
{
    std::vector<DottedComposition> result;
    DottedComposition cur;
    compositions_rec(k, cur, result);
    std::sort(result.begin(), result.end());
    return result;
}

std::optional<std::pair<SuperPartition, int>> sort_dotted(const DottedComposition& alpha)
{
    std::vector<int> dotted;
    std::vector<int> plain;
    for (const auto& e : alpha.entries)
        (e.dotted ? dotted : plain).push_back(e.value);

    // Parity of the permutation sorting the dotted values into strictly
    // decreasing order = number of ascents-as-inversions i < j, d_i < d_j.
    int inversions = 0;
    for (std::size_t i = 0; i < dotted.size(); ++i)
        for (std::size_t j = i + 1; j < dotted.size(); ++j) {
            if (dotted[i] == dotted[j])
                return std::nullopt;
            if (dotted[i] < dotted[j])
                ++inversions;
        }

    std::sort(dotted.rbegin(), dotted.rend());
    std::sort(plain.rbegin(), plain.rend());
    return std::make_pair(SuperPartition{std::move(dotted), std::move(plain)},
                          (inversions & 1) ? -1 : 1);
}

unsigned long long aut_count(const std::vector<int>& parts)
{
    unsigned long long result = 1;
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        for (std::size_t r = 2; r <= j - i; ++r)
            result *= r;
        i = j;
    }
    return result;
}

} // namespace supersym
