#include "supersym/graphs.hpp"

#include "supersym/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace supersym {

int pair_bit(int i, int j, int n)
{
    // i < j required
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

bool Component::has_edge(int i, int j) const
{
    if (i == j)
        return false;
    if (i > j)
        std::swap(i, j);
    return adj >> pair_bit(i, j, n) & 1;
}

namespace {

bool connected(int n, const std::vector<std::pair<int, int>>& edges)
{
    if (n <= 1)
        return true;
    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int v) {
        while (root[v] != v)
            v = root[v] = root[root[v]];
        return v;
    };
    for (auto [a, b] : edges)
        root[find(a)] = find(b);
    for (int v = 1; v < n; ++v)
        if (find(v) != find(0))
            return false;
    return true;
}

std::map<std::tuple<int, std::uint32_t, std::uint64_t>, Component>& canon_cache()
{
    static std::map<std::tuple<int, std::uint32_t, std::uint64_t>, Component> cache;
    return cache;
}

std::mutex& canon_mutex()
{
    static std::mutex m;
    return m;
}

} // namespace

Component canonical_component(int n, std::uint32_t white_mask,
                              const std::vector<std::pair<int, int>>& edges)
{
    if (n > 10)
        throw DomainError("canonical_component: components larger than 10 vertices are not supported");
    std::uint64_t raw_adj = 0;
    for (auto [a, b] : edges) {
        if (a == b || a < 0 || b < 0 || a >= n || b >= n)
            throw std::invalid_argument("canonical_component: bad edge");
        raw_adj |= 1ull << pair_bit(std::min(a, b), std::max(a, b), n);
    }
    const auto key = std::make_tuple(n, white_mask, raw_adj);
    {
        std::lock_guard<std::mutex> lock(canon_mutex());
        auto it = canon_cache().find(key);
        if (it != canon_cache().end())
            return it->second;
    }
    if (!connected(n, edges))
        throw std::invalid_argument("canonical_component: component not connected");

    std::vector<std::uint16_t> rows(n, 0);
    for (auto [a, b] : edges) {
        rows[a] |= std::uint16_t(1) << b;
        rows[b] |= std::uint16_t(1) << a;
    }
    std::vector<int> blacks, whites;
    for (int v = 0; v < n; ++v)
        (white_mask >> v & 1 ? whites : blacks).push_back(v);

    Component best;
    best.n = n;
    best.n_white = static_cast<int>(whites.size());
    const int npairs = n * (n - 1) / 2;
    std::uint64_t best_key = 0;
    bool have = false;
    std::vector<int> order(n);
    std::sort(blacks.begin(), blacks.end());
    std::sort(whites.begin(), whites.end());
    do {
        do {
            std::copy(blacks.begin(), blacks.end(), order.begin());
            std::copy(whites.begin(), whites.end(), order.begin() + blacks.size());
            std::uint64_t bits = 0, key = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (rows[order[i]] >> order[j] & 1) {
                        int b = pair_bit(i, j, n);
                        bits |= 1ull << b;
                        // Lexicographic comparison of the bit sequence: the
                        // (0,1) pair is the most significant position.
                        key |= 1ull << (npairs - 1 - b);
                    }
            if (!have || key < best_key) {
                best.adj = bits;
                best_key = key;
                have = true;
            }
        } while (std::next_permutation(whites.begin(), whites.end()));
    } while (std::next_permutation(blacks.begin(), blacks.end()));

    std::lock_guard<std::mutex> lock(canon_mutex());
    canon_cache().emplace(key, best);
    return best;
}

int TwoColoredGraph::n_vertices() const
{
    int t = 0;
    for (const auto& c : comps)
        t += c.n;
    return t;
}

int TwoColoredGraph::n_white() const
{
    int t = 0;
    for (const auto& c : comps)
        t += c.n_white;
    return t;
}

bool TwoColoredGraph::vertex_white(int v) const
{
    for (const auto& c : comps) {
        if (v < c.n)
            return c.is_white(v);
        v -= c.n;
    }
    throw std::out_of_range("vertex_white");
}

std::vector<std::pair<int, int>> TwoColoredGraph::all_edges() const
{
    std::vector<std::pair<int, int>> edges;
    int base = 0;
    for (const auto& c : comps) {
        for (int i = 0; i < c.n; ++i)
            for (int j = i + 1; j < c.n; ++j)
                if (c.has_edge(i, j))
                    edges.emplace_back(base + i, base + j);
        base += c.n;
    }
    return edges;
}

std::string TwoColoredGraph::to_string() const
{
    if (comps.empty())
        return "[empty]";
    std::string s = "[";
    for (std::size_t k = 0; k < comps.size(); ++k) {
        if (k)
            s += "|";
        const auto& c = comps[k];
        for (int v = 0; v < c.n; ++v)
            s += c.is_white(v) ? "o" : "b";
        s += ":";
        bool first = true;
        for (int i = 0; i < c.n; ++i)
            for (int j = i + 1; j < c.n; ++j)
                if (c.has_edge(i, j)) {
                    if (!first)
                        s += ",";
                    s += std::to_string(i) + "-" + std::to_string(j);
                    first = false;
                }
    }
    s += "]";
    return s;
}

GraphElement canonicalize(const std::vector<Component>& comps)
{
    // Stable sort; track original positions of odd-#white components to get
    // the sign, and detect equal odd components (class is zero).
    std::vector<std::pair<Component, int>> keyed;
    keyed.reserve(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i)
        keyed.emplace_back(comps[i], static_cast<int>(i));
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<int> odd_positions;
    for (const auto& [c, pos] : keyed)
        if (c.n_white & 1)
            odd_positions.push_back(pos);
    for (std::size_t i = 0; i + 1 < keyed.size(); ++i)
        if (keyed[i].first == keyed[i + 1].first && (keyed[i].first.n_white & 1))
            return {};
    int inv = 0;
    for (std::size_t a = 0; a < odd_positions.size(); ++a)
        for (std::size_t b = a + 1; b < odd_positions.size(); ++b)
            if (odd_positions[a] > odd_positions[b])
                ++inv;

    TwoColoredGraph g;
    g.comps.reserve(keyed.size());
    for (auto& [c, pos] : keyed)
        g.comps.push_back(c);
    return GraphElement(g, (inv & 1) ? Rational(-1) : Rational(1));
}

GraphElement graph_product(const GraphElement& f, const GraphElement& g)
{
    GraphElement result;
    for (const auto& [a, ca] : f)
        for (const auto& [b, cb] : g) {
            std::vector<Component> comps = a.comps;
            comps.insert(comps.end(), b.comps.begin(), b.comps.end());
            GraphElement t = canonicalize(comps);
            t *= ca * cb;
            result += t;
        }
    return result;
}

GraphElement restrict_graph(const TwoColoredGraph& g, std::uint32_t vertex_subset)
{
    // Induced subgraph, then split into connected parts. Parts are listed by
    // ascending #white (ties by smallest original vertex) and canonicalized.
    const int n = g.n_vertices();
    std::vector<int> picked;
    for (int v = 0; v < n; ++v)
        if (vertex_subset >> v & 1)
            picked.push_back(v);
    std::vector<int> local(n, -1);
    for (std::size_t i = 0; i < picked.size(); ++i)
        local[picked[i]] = static_cast<int>(i);

    const int k = static_cast<int>(picked.size());
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.all_edges())
        if (local[a] >= 0 && local[b] >= 0)
            edges.emplace_back(local[a], local[b]);

    // Union-find split.
    std::vector<int> root(k);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int v) {
        while (root[v] != v)
            v = root[v] = root[root[v]];
        return v;
    };
    for (auto [a, b] : edges)
        root[find(a)] = find(b);

    struct Part {
        std::vector<int> verts; // local indices
        int n_white = 0;
    };
    std::map<int, Part> parts; // keyed by find-root in first-vertex order
    for (int v = 0; v < k; ++v) {
        Part& p = parts[find(v)];
        p.verts.push_back(v);
        if (g.vertex_white(picked[v]))
            ++p.n_white;
    }
    std::vector<Part> ordered;
    for (auto& [r, p] : parts)
        ordered.push_back(std::move(p));
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const Part& a, const Part& b) { return a.n_white < b.n_white; });

    std::vector<Component> comps;
    for (const auto& p : ordered) {
        std::vector<int> sub(k, -1);
        for (std::size_t i = 0; i < p.verts.size(); ++i)
            sub[p.verts[i]] = static_cast<int>(i);
        std::uint32_t white = 0;
        for (std::size_t i = 0; i < p.verts.size(); ++i)
            if (g.vertex_white(picked[p.verts[i]]))
                white |= 1u << i;
        std::vector<std::pair<int, int>> sub_edges;
        for (auto [a, b] : edges)
            if (sub[a] >= 0 && sub[b] >= 0)
                sub_edges.emplace_back(sub[a], sub[b]);
        comps.push_back(canonical_component(static_cast<int>(p.verts.size()), white, sub_edges));
    }
    return canonicalize(comps);
}

namespace {

std::map<Component, GraphTensor>& component_coproduct_cache()
{
    static std::map<Component, GraphTensor> cache;
    return cache;
}

std::mutex& coproduct_mutex()
{
    static std::mutex m;
    return m;
}

// Scalar affine form in the unknown bipartition coefficients of one
// component: constant + sum over masks of coeff * c_mask.
struct AffineForm {
    Rational constant;
    std::map<std::uint32_t, Rational> linear;

    bool is_zero() const { return constant.is_zero() && linear.empty(); }

    void add_scaled(const AffineForm& o, const Rational& s)
    {
        if (s.is_zero())
            return;
        constant += o.constant * s;
        for (const auto& [m, v] : o.linear) {
            Rational& slot = linear[m];
            slot += v * s;
            if (slot.is_zero())
                linear.erase(m);
        }
    }
};

GraphTensor component_coproduct(const Component& c);

std::map<TwoColoredGraph, GraphTensor>& whole_coproduct_cache()
{
    static std::map<TwoColoredGraph, GraphTensor> cache;
    return cache;
}

GraphTensor whole_coproduct(const TwoColoredGraph& g)
{
    {
        std::lock_guard<std::mutex> lock(coproduct_mutex());
        auto it = whole_coproduct_cache().find(g);
        if (it != whole_coproduct_cache().end())
            return it->second;
    }
    GraphTensor result;
    result.add({TwoColoredGraph{}, TwoColoredGraph{}}, 1);
    for (const auto& c : g.comps) {
        GraphTensor factor = component_coproduct(c);
        GraphTensor next;
        for (const auto& [t1, c1] : result)
            for (const auto& [t2, c2] : factor) {
                // (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd
                int sign = (t1[1].parity() & t2[0].parity()) ? -1 : 1;
                GraphElement leftp = graph_product(GraphElement(t1[0]), GraphElement(t2[0]));
                GraphElement rightp = graph_product(GraphElement(t1[1]), GraphElement(t2[1]));
                for (const auto& [lg, lc] : leftp)
                    for (const auto& [rg, rc] : rightp)
                        next.add({lg, rg}, sign * c1 * c2 * lc * rc);
            }
        result = std::move(next);
    }
    std::lock_guard<std::mutex> lock(coproduct_mutex());
    whole_coproduct_cache().emplace(g, result);
    return result;
}

// The coproduct of a connected component is pinned down by solving, with
// exact arithmetic, the linear system expressing coassociativity,
// cocommutativity, and (for components with two or more whites) the
// vanishing of every zeta_alpha composite, over the unknown ordered-
// bipartition coefficients. Free coefficients default to the half-
// symmetrization weight (1 + (-1)^{#W1 #W2})/2, so the rule is the plain
// weighted bipartition sum wherever that rule is already consistent; on
// multi-white components the weight rule alone fails coassociativity and
// the solved corrections take over.
GraphTensor solve_component_coproduct(const Component& c)
{
    const int n = c.n;
    TwoColoredGraph whole{{c}};
    const std::uint32_t full = n >= 1 ? (1u << n) - 1 : 0;

    std::vector<GraphElement> restriction(full + 1);
    for (std::uint32_t m = 0; m <= full; ++m)
        restriction[m] = restrict_graph(whole, m);

    auto half_weight = [&](std::uint32_t m) -> Rational {
        int w1 = 0;
        for (int v = 0; v < n; ++v)
            if ((m >> v & 1) && c.is_white(v))
                ++w1;
        int w2 = c.n_white - w1;
        return ((w1 & 1) && (w2 & 1)) ? Rational(0) : Rational(1);
    };
    auto coeff_form = [&](std::uint32_t m) -> AffineForm {
        AffineForm a;
        if (m == 0 || m == full)
            a.constant = 1;
        else
            a.linear[m] = 1;
        return a;
    };

    using Word = std::vector<TwoColoredGraph>;
    std::map<Word, AffineForm> equations;
    auto add_term = [&](std::map<Word, AffineForm>& eqs, Word w, const AffineForm& f,
                        const Rational& s) {
        if (s.is_zero())
            return;
        auto& slot = eqs[std::move(w)];
        slot.add_scaled(f, s);
    };

    // Coassociativity: (Delta x id) Delta - (id x Delta) Delta = 0.
    for (std::uint32_t m = 0; m <= full; ++m) {
        AffineForm cm = coeff_form(m);
        // Left route: expand the first slot of the (m, ~m) term.
        if (m == full) {
            for (std::uint32_t k = 0; k <= full; ++k) {
                AffineForm ck = coeff_form(k);
                for (const auto& [ga, ca] : restriction[k])
                    for (const auto& [gb, cb] : restriction[full ^ k])
                        add_term(equations, {ga, gb, TwoColoredGraph{}}, ck, ca * cb);
            }
        } else if (!restriction[m].is_zero()) {
            const auto& [rg, rs] = *restriction[m].begin();
            for (const auto& [w, cw] : whole_coproduct(rg))
                for (const auto& [gc, cc] : restriction[full ^ m])
                    add_term(equations, {w[0], w[1], gc}, cm, rs * cw * cc);
        }
        // Right route, negated: expand the second slot.
        std::uint32_t mc = full ^ m;
        if (mc == full) {
            for (std::uint32_t k = 0; k <= full; ++k) {
                AffineForm ck = coeff_form(k);
                for (const auto& [ga, ca] : restriction[k])
                    for (const auto& [gb, cb] : restriction[full ^ k])
                        add_term(equations, {TwoColoredGraph{}, ga, gb}, ck, -ca * cb);
            }
        } else if (!restriction[mc].is_zero()) {
            const auto& [rg, rs] = *restriction[mc].begin();
            for (const auto& [w, cw] : whole_coproduct(rg))
                for (const auto& [ga, ca] : restriction[m])
                    add_term(equations, {ga, w[0], w[1]}, cm, -rs * ca * cw);
        }
    }

    // Cocommutativity: tau Delta - Delta = 0.
    std::map<Word, AffineForm> flip_equations;
    for (std::uint32_t m = 0; m <= full; ++m) {
        AffineForm cm = coeff_form(m);
        for (const auto& [ga, ca] : restriction[m])
            for (const auto& [gb, cb] : restriction[full ^ m]) {
                int sgn = (ga.parity() & gb.parity()) ? -1 : 1;
                add_term(flip_equations, {gb, ga}, cm, Rational(sgn) * ca * cb);
                add_term(flip_equations, {ga, gb}, cm, -ca * cb);
            }
    }

    // Vanishing of the universal image on multi-white components: every
    // zeta_alpha composite must be zero. The composites are linear in the
    // unknowns because the whole component reappears only with the fixed
    // boundary coefficient. Slots other than the first are final, so words
    // whose later slots already kill the supercharacter are pruned.
    std::map<DottedComposition, AffineForm> psi_equations;
    if (c.n_white >= 2 && n <= 8) {
        std::map<Word, AffineForm> tensor;
        tensor[{whole}].constant = 1;
        for (int arity = 1; arity <= n; ++arity) {
            if (arity > 1) {
                std::map<Word, AffineForm> next;
                for (const auto& [word, f] : tensor) {
                    auto expand_into = [&](const TwoColoredGraph& lg, const TwoColoredGraph& rg,
                                           const AffineForm& form, const Rational& s) {
                        if (!rg.is_empty() && zeta_ch_graph(rg).is_zero())
                            return; // slot 2 is final from now on
                        Word w;
                        w.reserve(word.size() + 1);
                        w.push_back(lg);
                        w.push_back(rg);
                        w.insert(w.end(), word.begin() + 1, word.end());
                        add_term(next, std::move(w), form, s);
                    };
                    if (word[0] == whole) {
                        // The whole component reappears only via boundary
                        // terms, so its coefficient stays constant and the
                        // system stays linear.
                        if (!f.linear.empty())
                            throw std::logic_error("graph coproduct solve: nonlinear term");
                        for (std::uint32_t m = 0; m <= full; ++m) {
                            AffineForm combined;
                            combined.add_scaled(coeff_form(m), f.constant);
                            for (const auto& [ga, ca] : restriction[m])
                                for (const auto& [gb, cb] : restriction[full ^ m])
                                    expand_into(ga, gb, combined, ca * cb);
                        }
                    } else {
                        for (const auto& [w2, cw] : whole_coproduct(word[0]))
                            expand_into(w2[0], w2[1], f, cw);
                    }
                }
                tensor = std::move(next);
            }
            for (const auto& [word, f] : tensor) {
                DottedComposition alpha;
                Rational scalar = 1;
                bool ok = true;
                for (const auto& slot : word) {
                    int d = slot.n_degree();
                    int p = slot.parity();
                    if (d == 0) {
                        ok = false;
                        break;
                    }
                    DualNumber z = zeta_ch_graph(slot);
                    Rational zs = p ? z.odd : z.even;
                    if (zs.is_zero()) {
                        ok = false;
                        break;
                    }
                    scalar *= zs;
                    alpha.entries.push_back({d - p, p != 0});
                }
                if (ok)
                    psi_equations[alpha].add_scaled(f, scalar);
            }
        }
    }

    // Exact Gaussian elimination; free unknowns take the half-rule weight.
    std::map<std::uint32_t, std::map<std::uint32_t, Rational>> pivot_rows;
    std::map<std::uint32_t, Rational> pivot_rhs;
    bool infeasible = false;
    auto eliminate = [&](const AffineForm& a) {
        if (infeasible || a.is_zero())
            return;
        std::map<std::uint32_t, Rational> row = a.linear;
        Rational rhs = -a.constant;
        for (auto it = row.begin(); it != row.end();) {
            auto p = pivot_rows.find(it->first);
            if (p == pivot_rows.end()) {
                ++it;
                continue;
            }
            Rational factor = it->second;
            it = row.erase(it);
            for (const auto& [j, v] : p->second) {
                Rational& slot = row[j];
                slot -= factor * v;
                if (slot.is_zero())
                    row.erase(j);
            }
            rhs -= factor * pivot_rhs[p->first];
            it = row.begin();
        }
        if (row.empty()) {
            if (!rhs.is_zero())
                infeasible = true;
            return;
        }
        std::uint32_t pv = row.begin()->first;
        Rational inv = Rational(1) / row.begin()->second;
        std::map<std::uint32_t, Rational> norm;
        for (const auto& [j, v] : row)
            if (j != pv)
                norm[j] = v * inv;
        Rational nrhs = rhs * inv;
        for (auto& [v2, prow] : pivot_rows) {
            auto f = prow.find(pv);
            if (f == prow.end())
                continue;
            Rational factor = f->second;
            prow.erase(f);
            for (const auto& [j, v] : norm) {
                Rational& slot = prow[j];
                slot -= factor * v;
                if (slot.is_zero())
                    prow.erase(j);
            }
            pivot_rhs[v2] -= factor * nrhs;
        }
        pivot_rows.emplace(pv, std::move(norm));
        pivot_rhs.emplace(pv, std::move(nrhs));
    };
    for (const auto& [w, a] : equations)
        eliminate(a);
    for (const auto& [w, a] : flip_equations)
        eliminate(a);
    for (const auto& [alpha, a] : psi_equations)
        eliminate(a);
    if (infeasible)
        throw std::logic_error("graph coproduct solve infeasible for " + whole.to_string());

    std::map<std::uint32_t, Rational> value;
    for (std::uint32_t m = 1; m < full; ++m)
        if (!pivot_rows.count(m))
            value[m] = half_weight(m);
    for (const auto& [pv, prow] : pivot_rows) {
        Rational v = pivot_rhs[pv];
        for (const auto& [j, vv] : prow)
            v -= vv * value.at(j);
        value[pv] = v;
    }

    GraphTensor result;
    for (std::uint32_t m = 0; m <= full; ++m) {
        Rational cm = (m == 0 || m == full) ? Rational(1) : value.at(m);
        if (cm.is_zero())
            continue;
        for (const auto& [ga, ca] : restriction[m])
            for (const auto& [gb, cb] : restriction[full ^ m])
                result.add({ga, gb}, cm * ca * cb);
    }
    return result;
}

GraphTensor component_coproduct(const Component& c)
{
    {
        std::lock_guard<std::mutex> lock(coproduct_mutex());
        auto it = component_coproduct_cache().find(c);
        if (it != component_coproduct_cache().end())
            return it->second;
    }
    GraphTensor result = solve_component_coproduct(c);
    std::lock_guard<std::mutex> lock(coproduct_mutex());
    component_coproduct_cache().emplace(c, result);
    return result;
}

} // namespace

GraphTensor graph_coproduct(const TwoColoredGraph& g)
{
    return whole_coproduct(g);
}

GraphTensor graph_coproduct_literal(const Component& c)
{
    TwoColoredGraph whole{{c}};
    GraphTensor result;
    const int n = c.n;
    const Rational half(1, 2);
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        std::uint32_t t = ~s & ((1u << n) - 1);
        int w1 = 0;
        for (int v = 0; v < n; ++v)
            if ((s >> v & 1) && c.is_white(v))
                ++w1;
        int w2 = c.n_white - w1;
        GraphElement left = restrict_graph(whole, s);
        GraphElement right = restrict_graph(whole, t);
        int swap_sign = ((w1 & 1) && (w2 & 1)) ? -1 : 1;
        for (const auto& [lg, lc] : left)
            for (const auto& [rg, rc] : right) {
                result.add({lg, rg}, half * lc * rc);
                result.add({rg, lg}, swap_sign * half * lc * rc);
            }
    }
    return result;
}

DualNumber zeta_ch_graph(const TwoColoredGraph& g)
{
    DualNumber v = DualNumber::one();
    for (const auto& c : g.comps) {
        DualNumber comp_value{0, 0};
        if (c.adj == 0 && c.n_white == 0)
            comp_value = DualNumber::one();
        else if (c.adj == 0 && c.n_white == 1)
            comp_value = DualNumber::eps();
        v = v * comp_value;
        if (v.is_zero())
            break;
    }
    return v;
}

DualNumber zeta_ch(const GraphElement& f)
{
    DualNumber result;
    for (const auto& [g, c] : f)
        result += c * zeta_ch_graph(g);
    return result;
}

bool is_coloring_admissible(const GraphElement& f)
{
    for (const auto& [g, c] : f)
        for (const auto& comp : g.comps)
            if (comp.n_white > 1)
                return false;
    return true;
}

namespace {

SymSuper coloring_sum(const TwoColoredGraph& g)
{
    const int n = g.n_vertices();
    if (n == 0)
        return slambda::unit();
    if (n > SuperPolynomial::max_vars)
        throw DomainError("coloring sum: too many vertices");
    auto edges = g.all_edges();
    std::vector<int> whites, blacks;
    for (int v = 0; v < n; ++v)
        (g.vertex_white(v) ? whites : blacks).push_back(v);

    SuperPolynomial poly(n);
    std::vector<int> color(n, 0);
    // All colorings f : V -> {1..n}; n colors suffice to determine every
    // m-coefficient since lengths are at most n.
    while (true) {
        bool proper = true;
        for (auto [a, b] : edges)
            if (color[a] == color[b]) {
                proper = false;
                break;
            }
        if (proper) {
            bool theta_clash = false;
            for (std::size_t a = 0; a < whites.size() && !theta_clash; ++a)
                for (std::size_t b = a + 1; b < whites.size(); ++b)
                    if (color[whites[a]] == color[whites[b]]) {
                        theta_clash = true;
                        break;
                    }
            if (!theta_clash) {
                SuperMonomial mono;
                mono.exp.assign(n, 0);
                for (int v : blacks)
                    mono.exp[color[v]] += 1;
                int inv = 0;
                for (std::size_t a = 0; a < whites.size(); ++a)
                    for (std::size_t b = a + 1; b < whites.size(); ++b)
                        if (color[whites[a]] > color[whites[b]])
                            ++inv;
                mono.odd = 0;
                for (int w : whites)
                    mono.odd |= 1u << color[w];
                poly.add_term(mono, (inv & 1) ? Rational(-1) : Rational(1));
            }
        }
        int i = 0;
        while (i < n && ++color[i] == n)
            color[i++] = 0;
        if (i == n)
            break;
    }
    return extract_m_expansion(poly);
}

} // namespace

SymSuper psi_coloring_literal(const GraphElement& f)
{
    SymSuper result;
    for (const auto& [g, c] : f) {
        SymSuper t = coloring_sum(g);
        t *= c;
        result += t;
    }
    return result;
}

SymSuper psi_coloring(const GraphElement& f)
{
    if (!is_coloring_admissible(f))
        throw MultiWhiteComponent("psi_coloring: a component has more than one white vertex; "
                                  "the coloring expansion does not apply");
    return psi_coloring_literal(f);
}

namespace {

std::map<int, std::vector<Component>>& component_catalog()
{
    static std::map<int, std::vector<Component>> catalog;
    return catalog;
}

std::mutex& catalog_mutex()
{
    static std::mutex m;
    return m;
}

} // namespace

const std::vector<Component>& connected_components_of_size(int n)
{
    std::lock_guard<std::mutex> lock(catalog_mutex());
    auto it = component_catalog().find(n);
    if (it != component_catalog().end())
        return it->second;

    std::vector<Component> out;
    if (n >= 1) {
        const int npairs = n * (n - 1) / 2;
        std::vector<std::pair<int, int>> all_pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                all_pairs.emplace_back(i, j);
        std::map<Component, bool> seen;
        for (std::uint64_t em = 0; em < (1ull << npairs); ++em) {
            std::vector<std::pair<int, int>> edges;
            for (int b = 0; b < npairs; ++b)
                if (em >> b & 1)
                    edges.push_back(all_pairs[b]);
            if (!connected(n, edges))
                continue;
            for (std::uint32_t white = 0; white < (1u << n); ++white)
                seen.emplace(canonical_component(n, white, edges), true);
        }
        for (const auto& [c, unused] : seen)
            out.push_back(c);
    }
    auto [pos, inserted] = component_catalog().emplace(n, std::move(out));
    return pos->second;
}

namespace {

void basis_rec(int remaining, std::vector<Component>& cur, std::vector<TwoColoredGraph>& out)
{
    if (remaining == 0) {
        out.push_back(TwoColoredGraph{cur}); // cur is key-sorted: canonical as is
        return;
    }
    for (int size = 1; size <= remaining; ++size) {
        for (const Component& c : connected_components_of_size(size)) {
            if (!cur.empty()) {
                // Keep the multiset sorted to enumerate each graph once.
                if (c < cur.back())
                    continue;
                if ((c.n_white & 1) && c == cur.back())
                    continue; // repeated odd component is zero
            }
            cur.push_back(c);
            basis_rec(remaining - size, cur, out);
            cur.pop_back();
        }
    }
}

} // namespace

std::vector<TwoColoredGraph> graph_basis(int k)
{
    std::vector<TwoColoredGraph> out;
    if (k == 0) {
        out.push_back(TwoColoredGraph{});
        return out;
    }
    std::vector<Component> cur;
    basis_rec(k, cur, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

TwoColoredGraph complete_one_white(int n_plus_1)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n_plus_1; ++i)
        for (int j = i + 1; j < n_plus_1; ++j)
            edges.emplace_back(i, j);
    Component c = canonical_component(n_plus_1, 1u << (n_plus_1 - 1), edges);
    return TwoColoredGraph{{c}};
}

TwoColoredGraph complete_black(int l)
{
    if (l == 0)
        return TwoColoredGraph{};
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
            edges.emplace_back(i, j);
    return TwoColoredGraph{{canonical_component(l, 0, edges)}};
}

namespace {

// Canonical components of one json object, in inferred (smallest-vertex)
// order; the quotient sign is applied once by the caller.
std::vector<Component> components_from_json_object(const nlohmann::json& obj)
{
    if (!obj.is_object() || !obj.contains("vertices"))
        throw DomainError("graph json: expected an object with a \"vertices\" field");
    const int n = obj.at("vertices").get<int>();
    if (n < 0 || n > 31)
        throw DomainError("graph json: vertex count out of range");
    std::uint32_t white = 0;
    if (obj.contains("white"))
        for (int w : obj.at("white").get<std::vector<int>>()) {
            if (w < 0 || w >= n)
                throw DomainError("graph json: white index out of range");
            white |= 1u << w;
        }
    std::vector<std::pair<int, int>> edges;
    if (obj.contains("edges"))
        for (const auto& e : obj.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw DomainError("graph json: edge must be a pair");
            int a = e[0].get<int>(), b = e[1].get<int>();
            if (a == b || a < 0 || b < 0 || a >= n || b >= n)
                throw DomainError("graph json: bad edge endpoints");
            edges.emplace_back(a, b);
        }

    // Components inferred, ordered by smallest vertex index.
    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int v) {
        while (root[v] != v)
            v = root[v] = root[root[v]];
        return v;
    };
    for (auto [a, b] : edges)
        root[find(a)] = find(b);
    std::map<int, std::vector<int>> groups;
    std::vector<int> order;
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (groups[r].empty())
            order.push_back(r);
        groups[r].push_back(v);
    }
    std::vector<Component> comps;
    for (int r : order) {
        const auto& verts = groups[r];
        std::vector<int> local(n, -1);
        for (std::size_t i = 0; i < verts.size(); ++i)
            local[verts[i]] = static_cast<int>(i);
        std::uint32_t cw = 0;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (white >> verts[i] & 1)
                cw |= 1u << i;
        std::vector<std::pair<int, int>> ce;
        for (auto [a, b] : edges)
            if (local[a] >= 0 && local[b] >= 0)
                ce.emplace_back(local[a], local[b]);
        comps.push_back(canonical_component(static_cast<int>(verts.size()), cw, ce));
    }
    return comps;
}

} // namespace

GraphElement parse_graph_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(std::string("graph json: ") + e.what());
    }
    std::vector<Component> comps;
    if (j.is_array()) {
        for (const auto& obj : j)
            for (const auto& c : components_from_json_object(obj))
                comps.push_back(c);
    } else {
        comps = components_from_json_object(j);
    }
    return canonicalize(comps);
}

} // namespace supersym
