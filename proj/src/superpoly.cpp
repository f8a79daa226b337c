#include "supersym/superpoly.hpp"

#include "supersym/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace supersym {

int SuperMonomial::x_degree() const
{
    return std::accumulate(exp.begin(), exp.end(), 0);
}

SuperPolynomial::SuperPolynomial(int n_vars) : n_vars_(n_vars)
{
    if (n_vars < 0 || n_vars > max_vars)
        throw std::invalid_argument("SuperPolynomial: n_vars out of range");
}

SuperPolynomial SuperPolynomial::constant(int n_vars, const Rational& c)
{
    SuperPolynomial p(n_vars);
    p.add_term(SuperMonomial{std::vector<int>(n_vars, 0), 0}, c);
    return p;
}

void SuperPolynomial::add_term(const SuperMonomial& m, const Rational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Rational SuperPolynomial::coefficient(const SuperMonomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& o)
{
    if (n_vars_ != o.n_vars_)
        throw std::invalid_argument("SuperPolynomial: mismatched n_vars");
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& o)
{
    if (n_vars_ != o.n_vars_)
        throw std::invalid_argument("SuperPolynomial: mismatched n_vars");
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

SuperPolynomial& SuperPolynomial::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        *this = SuperPolynomial(n_vars_);
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

namespace {

// #{(i,j) : i in a, j in b, i > j}
int merge_inversions(std::uint32_t a, std::uint32_t b)
{
    int inv = 0;
    while (b) {
        int j = __builtin_ctz(b);
        b &= b - 1;
        inv += __builtin_popcount(a >> (j + 1));
    }
    return inv;
}

} // namespace

SuperPolynomial mul(const SuperPolynomial& p, const SuperPolynomial& q)
{
    if (p.n_vars() != q.n_vars())
        throw std::invalid_argument("mul: mismatched n_vars");
    SuperPolynomial r(p.n_vars());
    for (const auto& [mp, cp] : p.terms()) {
        for (const auto& [mq, cq] : q.terms()) {
            if (mp.odd & mq.odd)
                continue; // theta_i^2 = 0
            SuperMonomial m;
            m.exp.resize(mp.exp.size());
            for (std::size_t i = 0; i < mp.exp.size(); ++i)
                m.exp[i] = mp.exp[i] + mq.exp[i];
            m.odd = mp.odd | mq.odd;
            Rational c = cp * cq;
            if (merge_inversions(mp.odd, mq.odd) & 1)
                c = -c;
            r.add_term(m, c);
        }
    }
    return r;
}

SuperPolynomial act(const std::vector<int>& sigma, const SuperPolynomial& p)
{
    const int n = p.n_vars();
    if (static_cast<int>(sigma.size()) != n)
        throw std::invalid_argument("act: permutation size mismatch");
    SuperPolynomial r(n);
    for (const auto& [m, c] : p.terms()) {
        SuperMonomial t;
        t.exp.assign(n, 0);
        for (int i = 0; i < n; ++i)
            t.exp[sigma[i]] = m.exp[i];
        // Map theta indices and count the inversions of the mapped sequence
        // relative to ascending order.
        std::vector<int> mapped;
        for (int i = 0; i < n; ++i)
            if (m.odd >> i & 1)
                mapped.push_back(sigma[i]);
        int inv = 0;
        for (std::size_t a = 0; a < mapped.size(); ++a)
            for (std::size_t b = a + 1; b < mapped.size(); ++b)
                if (mapped[a] > mapped[b])
                    ++inv;
        t.odd = 0;
        for (int i : mapped)
            t.odd |= 1u << i;
        r.add_term(t, (inv & 1) ? -c : c);
    }
    return r;
}

SuperPolynomial shift_vars(const SuperPolynomial& p, int n_vars, int offset)
{
    if (offset < 0 || p.n_vars() + offset > n_vars)
        throw std::invalid_argument("shift_vars: target too small");
    SuperPolynomial r(n_vars);
    for (const auto& [m, c] : p.terms()) {
        SuperMonomial t;
        t.exp.assign(n_vars, 0);
        for (int i = 0; i < p.n_vars(); ++i)
            t.exp[i + offset] = m.exp[i];
        t.odd = m.odd << offset; // order preserved, no sign
        r.add_term(t, c);
    }
    return r;
}

DualNumber specialize_point(const SuperPolynomial& p)
{
    DualNumber d;
    for (const auto& [m, c] : p.terms()) {
        bool survives = true;
        for (std::size_t i = 1; i < m.exp.size(); ++i)
            if (m.exp[i] != 0) {
                survives = false;
                break;
            }
        if (!survives || (m.odd & ~1u))
            continue;
        if (m.odd & 1u)
            d.odd += c;
        else
            d.even += c;
    }
    return d;
}

namespace {

struct Placement {
    std::vector<int> theta_indices; // index assigned to each dotted part, in part order
    std::vector<std::pair<int, int>> x_terms; // (index, exponent)
};

void place_dotted(const SuperPartition& lambda, int n_vars, std::size_t pos,
                  std::uint32_t used, Placement& cur, SuperPolynomial& out);

void place_plain(const SuperPartition& lambda, int n_vars, std::size_t group,
                 std::uint32_t used, Placement& cur, SuperPolynomial& out)
{
    // Plain parts grouped by value; indices within a group chosen increasing
    // so each distinct monomial arises exactly once.
    std::size_t i = group;
    if (i >= lambda.plain.size()) {
        SuperMonomial m;
        m.exp.assign(n_vars, 0);
        for (std::size_t k = 0; k < cur.theta_indices.size(); ++k)
            m.exp[cur.theta_indices[k]] += lambda.dotted[k];
        for (const auto& [idx, e] : cur.x_terms)
            m.exp[idx] += e;
        int inv = 0;
        for (std::size_t a = 0; a < cur.theta_indices.size(); ++a)
            for (std::size_t b = a + 1; b < cur.theta_indices.size(); ++b)
                if (cur.theta_indices[a] > cur.theta_indices[b])
                    ++inv;
        m.odd = 0;
        for (int t : cur.theta_indices)
            m.odd |= 1u << t;
        out.add_term(m, (inv & 1) ? Rational(-1) : Rational(1));
        return;
    }
    std::size_t j = i;
    while (j < lambda.plain.size() && lambda.plain[j] == lambda.plain[i])
        ++j;
    const int value = lambda.plain[i];
    const int count = static_cast<int>(j - i);
    // Choose an increasing tuple of `count` unused indices.
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int start, int left) -> void {
        if (left == 0) {
            for (int idx : chosen)
                cur.x_terms.emplace_back(idx, value);
            place_plain(lambda, n_vars, j, used | [&] {
                std::uint32_t m = 0;
                for (int idx : chosen)
                    m |= 1u << idx;
                return m;
            }(), cur, out);
            for (int k = 0; k < count; ++k)
                cur.x_terms.pop_back();
            return;
        }
        for (int idx = start; idx <= n_vars - left; ++idx) {
            if (used >> idx & 1)
                continue;
            chosen.push_back(idx);
            self(self, idx + 1, left - 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0, count);
}

void place_dotted(const SuperPartition& lambda, int n_vars, std::size_t pos,
                  std::uint32_t used, Placement& cur, SuperPolynomial& out)
{
    if (pos >= lambda.dotted.size()) {
        place_plain(lambda, n_vars, 0, used, cur, out);
        return;
    }
    for (int idx = 0; idx < n_vars; ++idx) {
        if (used >> idx & 1)
            continue;
        cur.theta_indices.push_back(idx);
        place_dotted(lambda, n_vars, pos + 1, used | (1u << idx), cur, out);
        cur.theta_indices.pop_back();
    }
}

} // namespace

SuperPolynomial realize_m(const SuperPartition& lambda, int n_vars)
{
    if (!lambda.is_valid())
        throw std::invalid_argument("realize_m: malformed superpartition");
    if (n_vars < lambda.length())
        throw std::invalid_argument("realize_m: need at least " +
                                    std::to_string(lambda.length()) + " variables");
    SuperPolynomial out(n_vars);
    Placement cur;
    place_dotted(lambda, n_vars, 0, 0, cur, out);
    if (lambda.is_empty())
        return SuperPolynomial::constant(n_vars, 1);
    return out;
}

SuperPolynomial realize_M(const DottedComposition& alpha, int n_vars)
{
    if (!alpha.is_valid())
        throw std::invalid_argument("realize_M: malformed dotted composition");
    const int l = alpha.length();
    if (n_vars < l)
        throw std::invalid_argument("realize_M: need at least " + std::to_string(l) + " variables");
    SuperPolynomial out(n_vars);
    std::vector<int> idx;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(idx.size()) == l) {
            SuperMonomial m;
            m.exp.assign(n_vars, 0);
            m.odd = 0;
            for (int k = 0; k < l; ++k) {
                m.exp[idx[k]] = alpha.entries[k].value;
                if (alpha.entries[k].dotted)
                    m.odd |= 1u << idx[k]; // i1 < ... < il: already ascending
            }
            out.add_term(m, 1);
            return;
        }
        for (int i = start; i <= n_vars - (l - static_cast<int>(idx.size())); ++i) {
            idx.push_back(i);
            self(self, i + 1);
            idx.pop_back();
        }
    };
    rec(rec, 0);
    if (l == 0)
        return SuperPolynomial::constant(n_vars, 1);
    return out;
}

namespace {

// Support of a monomial: indices with a positive exponent or a theta factor.
// Returns -1 unless it is exactly {0..l-1} for some l; otherwise l.
int canonical_support(const SuperMonomial& m)
{
    int l = 0;
    for (std::size_t i = 0; i < m.exp.size(); ++i)
        if (m.exp[i] > 0 || (m.odd >> i & 1))
            l = static_cast<int>(i) + 1;
    for (int i = 0; i < l; ++i)
        if (m.exp[i] == 0 && !(m.odd >> i & 1))
            return -1;
    return l;
}

} // namespace

LinearCombination<DottedComposition> extract_M_expansion(const SuperPolynomial& p)
{
    LinearCombination<DottedComposition> result;
    for (const auto& [m, c] : p.terms()) {
        int l = canonical_support(m);
        if (l < 0)
            continue;
        DottedComposition alpha;
        alpha.entries.reserve(l);
        for (int i = 0; i < l; ++i)
            alpha.entries.push_back({m.exp[i], (m.odd >> i & 1) != 0});
        result.add(alpha, c);
    }
    SuperPolynomial residual = p;
    for (const auto& [alpha, c] : result) {
        SuperPolynomial r = realize_M(alpha, p.n_vars());
        r *= c;
        residual -= r;
    }
    if (!residual.is_zero())
        throw NotQuasiSymmetric("extract_M_expansion: nonzero residual (input is not "
                                "quasi-symmetric at this truncation)");
    return result;
}

LinearCombination<SuperPartition> extract_m_expansion(const SuperPolynomial& p)
{
    LinearCombination<SuperPartition> result;
    for (const auto& [m, c] : p.terms()) {
        int l = canonical_support(m);
        if (l < 0)
            continue;
        // Canonical m-monomial: theta support is a prefix {0..mf-1}, dotted
        // exponents strictly decreasing, then plain exponents weakly
        // decreasing.
        int mf = __builtin_popcount(m.odd);
        if (m.odd != (mf ? (1u << mf) - 1 : 0u))
            continue;
        SuperPartition sp;
        bool ok = true;
        for (int i = 0; i < mf; ++i) {
            if (i > 0 && m.exp[i - 1] <= m.exp[i]) {
                ok = false;
                break;
            }
            sp.dotted.push_back(m.exp[i]);
        }
        for (int i = mf; ok && i < l; ++i) {
            if (m.exp[i] < 1 || (i > mf && m.exp[i - 1] < m.exp[i])) {
                ok = false;
                break;
            }
            sp.plain.push_back(m.exp[i]);
        }
        if (!ok)
            continue;
        result.add(sp, c);
    }
    SuperPolynomial residual = p;
    for (const auto& [sp, c] : result) {
        SuperPolynomial r = realize_m(sp, p.n_vars());
        r *= c;
        residual -= r;
    }
    if (!residual.is_zero())
        throw NotSymmetric("extract_m_expansion: nonzero residual (input is not "
                           "symmetric at this truncation)");
    return result;
}

} // namespace supersym
