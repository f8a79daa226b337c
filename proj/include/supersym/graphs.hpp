#pragma once

#include "supersym/dual_number.hpp"
#include "supersym/linear_combination.hpp"
#include "supersym/sym_super.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace supersym {

// A connected two-colored graph in canonical labeling: black vertices first,
// then white; among those orders the adjacency bitstring (row-major upper
// triangle) is lexicographically minimal as an integer key.
struct Component {
    int n_white = 0;
    int n = 0;
    std::uint64_t adj = 0;

    int n_black() const { return n - n_white; }
    bool is_white(int v) const { return v >= n_black(); }
    bool has_edge(int i, int j) const;

    // Fields are ordered so the default comparison is the canonical
    // component sort key (#white, #vertices, certificate).
    auto operator<=>(const Component&) const = default;
};

// Bit position of the unordered pair i < j among n vertices.
int pair_bit(int i, int j, int n);

// Canonical form of a connected component given an arbitrary labeling.
// Components with more than 10 vertices are rejected.
Component canonical_component(int n, std::uint32_t white_mask,
                              const std::vector<std::pair<int, int>>& edges);

// Ordered list of canonical components; vertices are numbered globally,
// component after component.
struct TwoColoredGraph {
    std::vector<Component> comps;

    int n_vertices() const;
    int n_white() const;
    int n_degree() const { return n_vertices(); }
    int parity() const { return n_white() & 1; }
    bool is_empty() const { return comps.empty(); }

    // Global-index views.
    bool vertex_white(int v) const;
    std::vector<std::pair<int, int>> all_edges() const;

    auto operator<=>(const TwoColoredGraph&) const = default;
    std::string to_string() const;
};

using GraphElement = LinearCombination<TwoColoredGraph>;
using GraphTensor = LinearCombination<std::vector<TwoColoredGraph>>;

// Sorts components by (#white, #vertices, certificate); the sign is the
// parity of the permutation restricted to odd-#white components. Two equal
// odd-#white components give 0.
GraphElement canonicalize(const std::vector<Component>& comps);

// [G1] * [G2] = [G1|G2], canonicalized.
GraphElement graph_product(const GraphElement& f, const GraphElement& g);

// Induced subgraph on a global-vertex subset; components ordered by
// ascending #white before canonicalization fixes the representative.
GraphElement restrict_graph(const TwoColoredGraph& g, std::uint32_t vertex_subset);

// Coproduct of a basis graph. Ordered bipartitions of each component's
// vertex set weighted by (1 + (-1)^{#W1 #W2})/2, extended over components
// with the Koszul-signed tensor product.
GraphTensor graph_coproduct(const TwoColoredGraph& g);

// The definition as written: (1/2) sum over ordered bipartitions of both
// tensor orders with the sign. Connected graphs only; used to validate the
// simplified rule.
GraphTensor graph_coproduct_literal(const Component& c);

// 1 on an edge-free all-black component, eps on an edge-free one-white
// component, 0 otherwise; multiplicative over components.
DualNumber zeta_ch(const GraphElement& f);
DualNumber zeta_ch_graph(const TwoColoredGraph& g);

// Chromatic symmetric function in superspace via the universal morphism to
// Lambda; authoritative definition. Implemented in instances.cpp.
SymSuper psi_universal(const GraphElement& f);

// Proper-coloring expansion, restricted to graphs whose components carry at
// most one white vertex; throws MultiWhiteComponent otherwise.
SymSuper psi_coloring(const GraphElement& f);

// The coloring sum as written, with no admissibility guard. Outside the
// admissible class it can disagree with psi_universal.
SymSuper psi_coloring_literal(const GraphElement& f);

bool is_coloring_admissible(const GraphElement& f);

// Connected canonical components with n vertices (deduplicated), and the
// degree-k basis of the chromatic Hopf superalgebra.
const std::vector<Component>& connected_components_of_size(int n);
std::vector<TwoColoredGraph> graph_basis(int k);

// Complete graph on n+1 vertices with exactly one white vertex.
TwoColoredGraph complete_one_white(int n_plus_1);
// Complete all-black graph on l vertices.
TwoColoredGraph complete_black(int l);

// JSON input: {"vertices": n, "white": [indices], "edges": [[i,j],...]} or a
// list of such objects (explicit component-group order). Components within
// one object are ordered by smallest vertex index.
GraphElement parse_graph_json(const std::string& text);

} // namespace supersym
