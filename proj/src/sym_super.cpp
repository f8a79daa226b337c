#include "supersym/sym_super.hpp"

#include "supersym/errors.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace supersym {

int EIndex::total_degree() const
{
    return std::accumulate(dotted.begin(), dotted.end(), 0) +
           std::accumulate(plain.begin(), plain.end(), 0);
}

bool EIndex::operator<(const EIndex& o) const
{
    return std::make_tuple(n_degree(), fermionic_degree(), std::cref(dotted), std::cref(plain)) <
           std::make_tuple(o.n_degree(), o.fermionic_degree(), std::cref(o.dotted), std::cref(o.plain));
}

std::string EIndex::to_string() const
{
    if (dotted.empty() && plain.empty())
        return "1";
    std::string s;
    for (int d : dotted) {
        if (!s.empty())
            s += "*";
        s += "et[" + std::to_string(d) + "]";
    }
    for (int p : plain) {
        if (!s.empty())
            s += "*";
        s += "e[" + std::to_string(p) + "]";
    }
    return s;
}

namespace slambda {

SymSuper m(const SuperPartition& lambda)
{
    if (!lambda.is_valid())
        throw std::invalid_argument("m: malformed superpartition " + lambda.to_string());
    return SymSuper(lambda);
}

SymSuper e(int r)
{
    if (r < 0)
        throw std::invalid_argument("e: negative index");
    return SymSuper(SuperPartition{{}, std::vector<int>(r, 1)});
}

SymSuper et(int s)
{
    if (s < 0)
        throw std::invalid_argument("et: negative index");
    return SymSuper(SuperPartition{{0}, std::vector<int>(s, 1)});
}

SymSuper unit() { return SymSuper(SuperPartition{}); }

int max_length(const SymSuper& f)
{
    int l = 0;
    for (const auto& [sp, c] : f)
        l = std::max(l, sp.length());
    return l;
}

SuperPolynomial realize(const SymSuper& f, int n_vars)
{
    SuperPolynomial p(n_vars);
    for (const auto& [sp, c] : f) {
        SuperPolynomial r = realize_m(sp, n_vars);
        r *= c;
        p += r;
    }
    return p;
}

SymSuper mul(const SymSuper& f, const SymSuper& g)
{
    if (f.is_zero() || g.is_zero())
        return {};
    const int n = max_length(f) + max_length(g);
    SuperPolynomial p = supersym::mul(realize(f, n), realize(g, n));
    SymSuper result;
    for (const auto& [sp, c] : extract_m_expansion(p))
        result.add(sp, c);
    return result;
}

namespace {

// Reads a canonical m-monomial out of the window [lo, lo+width) of m's
// variables; nullopt when the window content is not in canonical position.
std::optional<SuperPartition> read_window(const SuperMonomial& m, int lo, int width)
{
    SuperPartition sp;
    int l = 0;
    for (int i = 0; i < width; ++i)
        if (m.exp[lo + i] > 0 || (m.odd >> (lo + i) & 1))
            l = i + 1;
    int mf = 0;
    while (mf < l && (m.odd >> (lo + mf) & 1))
        ++mf;
    for (int i = mf; i < l; ++i)
        if (m.odd >> (lo + i) & 1)
            return std::nullopt; // theta support not a prefix
    for (int i = 0; i < mf; ++i) {
        if (i > 0 && m.exp[lo + i - 1] <= m.exp[lo + i])
            return std::nullopt;
        sp.dotted.push_back(m.exp[lo + i]);
    }
    for (int i = mf; i < l; ++i) {
        if (m.exp[lo + i] < 1 || (i > mf && m.exp[lo + i - 1] < m.exp[lo + i]))
            return std::nullopt;
        sp.plain.push_back(m.exp[lo + i]);
    }
    return sp;
}

} // namespace

SymTensor coproduct(const SymSuper& f)
{
    SymTensor result;
    if (f.is_zero())
        return result;
    const int n = max_length(f);
    if (n == 0) {
        result.add({SuperPartition{}, SuperPartition{}}, f.coefficient(SuperPartition{}));
        return result;
    }
    SuperPolynomial p = realize(f, 2 * n);
    for (const auto& [mono, c] : p.terms()) {
        auto left = read_window(mono, 0, n);
        auto right = read_window(mono, n, n);
        if (!left || !right)
            continue;
        result.add({*left, *right}, c);
    }
    // Residual check: the read-off tensor must reproduce the realization.
    SuperPolynomial residual = p;
    for (const auto& [pair, c] : result) {
        SuperPolynomial t = supersym::mul(shift_vars(realize_m(pair[0], n), 2 * n, 0),
                                          shift_vars(realize_m(pair[1], n), 2 * n, n));
        t *= c;
        residual -= t;
    }
    if (!residual.is_zero())
        throw NotSymmetric("coproduct: tensor extraction residual is nonzero");
    return result;
}

DualNumber zeta_S(const SymSuper& f)
{
    DualNumber d;
    for (const auto& [sp, c] : f) {
        if (sp.length() > 1)
            continue;
        if (sp.fermionic_degree() == 1)
            d.odd += c;
        else
            d.even += c;
    }
    return d;
}

Rational counit(const SymSuper& f) { return f.coefficient(SuperPartition{}); }

namespace {

std::map<EIndex, SymSuper>& from_e_cache()
{
    static std::map<EIndex, SymSuper> cache;
    return cache;
}

std::mutex& from_e_mutex()
{
    static std::mutex m;
    return m;
}

void strict_lists(int sum, int len, int bound, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out)
{
    if (len == 0) {
        if (sum == 0)
            out.push_back(cur);
        return;
    }
    for (int v = len - 1; v < bound && v <= sum - (len - 1) * (len - 2) / 2; ++v) {
        cur.push_back(v);
        strict_lists(sum - v, len - 1, v, cur, out);
        cur.pop_back();
    }
}

void partitions(int sum, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out)
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

// All EIndex of total degree n, fermionic degree m.
std::vector<EIndex> e_indices(int n, int m)
{
    std::vector<EIndex> out;
    for (int d = m * (m - 1) / 2; d <= n; ++d) {
        std::vector<std::vector<int>> ds, ps;
        std::vector<int> cur;
        strict_lists(d, m, d + 1, cur, ds);
        partitions(n - d, n - d, cur, ps);
        for (const auto& dl : ds)
            for (const auto& pl : ps)
                out.push_back(EIndex{dl, pl});
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

SymSuper from_e_index(const EIndex& idx)
{
    {
        std::lock_guard<std::mutex> lock(from_e_mutex());
        auto it = from_e_cache().find(idx);
        if (it != from_e_cache().end())
            return it->second;
    }
    SymSuper acc = unit();
    for (int s : idx.dotted)
        acc = mul(acc, et(s));
    for (int r : idx.plain)
        acc = mul(acc, e(r));
    std::lock_guard<std::mutex> lock(from_e_mutex());
    from_e_cache().emplace(idx, acc);
    return acc;
}

SymSuper from_e(const EPoly& ep)
{
    SymSuper result;
    for (const auto& [idx, c] : ep) {
        SymSuper t = from_e_index(idx);
        t *= c;
        result += t;
    }
    return result;
}

EPoly to_e(const SymSuper& f)
{
    // Split by bidegree and solve the exact linear system per block.
    std::map<std::pair<int, int>, SymSuper> blocks;
    for (const auto& [sp, c] : f)
        blocks[{sp.total_degree(), sp.fermionic_degree()}].add(sp, c);

    EPoly result;
    for (const auto& [bidegree, block] : blocks) {
        const auto [n, m] = bidegree;
        std::vector<EIndex> idxs = e_indices(n, m);
        std::vector<SuperPartition> sps;
        for (const auto& sp : superpartitions_of_degree(n + m))
            if (sp.fermionic_degree() == m)
                sps.push_back(sp);
        const std::size_t dim = sps.size();
        if (idxs.size() != dim)
            throw std::logic_error("to_e: basis dimension mismatch");
        std::map<SuperPartition, std::size_t> row_of;
        for (std::size_t i = 0; i < dim; ++i)
            row_of[sps[i]] = i;

        // Columns are generator-product images, right-hand side is the block.
        std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(dim + 1, Rational(0)));
        for (std::size_t j = 0; j < dim; ++j)
            for (const auto& [sp, c] : from_e_index(idxs[j]))
                a[row_of.at(sp)][j] = c;
        for (const auto& [sp, c] : block)
            a[row_of.at(sp)][dim] = c;

        for (std::size_t col = 0, row = 0; col < dim; ++col) {
            std::size_t piv = row;
            while (piv < dim && a[piv][col].is_zero())
                ++piv;
            if (piv == dim)
                throw std::logic_error("to_e: singular generator system");
            std::swap(a[piv], a[row]);
            Rational inv = Rational(1) / a[row][col];
            for (std::size_t k = col; k <= dim; ++k)
                a[row][k] *= inv;
            for (std::size_t r = 0; r < dim; ++r) {
                if (r == row || a[r][col].is_zero())
                    continue;
                Rational factor = a[r][col];
                for (std::size_t k = col; k <= dim; ++k)
                    a[r][k] -= factor * a[row][k];
            }
            ++row;
        }
        for (std::size_t j = 0; j < dim; ++j)
            result.add(idxs[j], a[j][dim]);
    }
    return result;
}

} // namespace slambda

} // namespace supersym
