#pragma once

#include "supersym/combinatorics.hpp"
#include "supersym/dual_number.hpp"
#include "supersym/linear_combination.hpp"
#include "supersym/superpoly.hpp"

#include <utility>
#include <vector>

namespace supersym {

// Symmetric functions in superspace, m-basis coefficients.
using SymSuper = LinearCombination<SuperPartition>;

// Tensor element over SuperPartition x SuperPartition.
using SymTensor = LinearCombination<std::vector<SuperPartition>>;

// Monomial product of e- and et-generators: dotted indices (et factors)
// strictly decreasing, plain indices (e factors) weakly decreasing >= 1.
struct EIndex {
    std::vector<int> dotted;
    std::vector<int> plain;

    int total_degree() const;
    int fermionic_degree() const { return static_cast<int>(dotted.size()); }
    int n_degree() const { return total_degree() + fermionic_degree(); }

    bool operator==(const EIndex&) const = default;
    bool operator<(const EIndex& o) const;

    std::string to_string() const; // "et[1]*e[2]*e[1]"
};

using EPoly = LinearCombination<EIndex>;

namespace slambda {

SymSuper m(const SuperPartition& lambda);
SymSuper e(int r);  // e_r = m_{(;1^r)}, e_0 = 1
SymSuper et(int s); // et_s = m_{(0;1^s)}
SymSuper unit();

int max_length(const SymSuper& f);

// Realizes f with n_vars variables (requires n_vars >= max_length(f)).
SuperPolynomial realize(const SymSuper& f, int n_vars);

// Product via realization at N = max_length(f) + max_length(g) variables;
// the result is independent of any larger N.
SymSuper mul(const SymSuper& f, const SymSuper& g);

// Coproduct via alphabet doubling: realize in 2N variables, split the
// alphabet, read m (x) m coefficients off canonical bi-monomials.
SymTensor coproduct(const SymSuper& f);

// x1 = 1, theta1 = eps specialization: m_{(;r)} -> 1, m_{(s;)} -> eps,
// unit -> 1, everything of length >= 2 -> 0.
DualNumber zeta_S(const SymSuper& f);

Rational counit(const SymSuper& f);

// Expansion over products of e/et generators (unique by freeness); solved
// per bidegree as an exact linear system. Round trips are identities.
EPoly to_e(const SymSuper& f);
SymSuper from_e(const EPoly& ep);
SymSuper from_e_index(const EIndex& idx);

} // namespace slambda

} // namespace supersym
