#pragma once

#include "supersym/combinatorics.hpp"
#include "supersym/dual_number.hpp"
#include "supersym/linear_combination.hpp"
#include "supersym/rational.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace supersym {

// x^e * theta_{i1}...theta_{ik} with theta factors in ascending index order.
// theta_i^2 = 0 is structural: odd is a bitmask (bit i = theta_{i+1}).
struct SuperMonomial {
    std::vector<int> exp; // length n_vars
    std::uint32_t odd = 0;

    int x_degree() const;
    int fermionic_degree() const { return __builtin_popcount(odd); }

    bool operator==(const SuperMonomial&) const = default;
    bool operator<(const SuperMonomial& o) const
    {
        if (exp != o.exp)
            return exp < o.exp;
        return odd < o.odd;
    }
};

// Truncated polynomial in N commuting x_i and N anticommuting theta_i with
// exact rational coefficients; the ground-truth multiplication oracle.
class SuperPolynomial {
public:
    static constexpr int max_vars = 31;

    explicit SuperPolynomial(int n_vars = 0);

    static SuperPolynomial zero(int n_vars) { return SuperPolynomial(n_vars); }
    static SuperPolynomial constant(int n_vars, const Rational& c);

    int n_vars() const { return n_vars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<SuperMonomial, Rational>& terms() const { return terms_; }

    void add_term(const SuperMonomial& m, const Rational& c);
    Rational coefficient(const SuperMonomial& m) const;

    SuperPolynomial& operator+=(const SuperPolynomial& o);
    SuperPolynomial& operator-=(const SuperPolynomial& o);
    SuperPolynomial& operator*=(const Rational& c);
    friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
    friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }

    bool operator==(const SuperPolynomial&) const = default;

private:
    int n_vars_;
    std::map<SuperMonomial, Rational> terms_;
};

// Koszul product. Odd supports merge with sign (-1)^inv, inv counting pairs
// (i in p, j in q) with i > j; intersecting supports kill the term.
SuperPolynomial mul(const SuperPolynomial& p, const SuperPolynomial& q);

// Diagonal S_N action on indices, with the re-sorting sign on theta factors.
SuperPolynomial act(const std::vector<int>& sigma, const SuperPolynomial& p);

// Embeds p into a ring with more variables, variable i -> i + offset.
SuperPolynomial shift_vars(const SuperPolynomial& p, int n_vars, int offset);

// x1 = 1, theta1 = eps, all other variables 0.
DualNumber specialize_point(const SuperPolynomial& p);

// Monomial symmetric function in superspace, truncated to N variables:
// the orbit sum of theta_1..theta_m x^Lambda where each distinct
// super-monomial appears with coefficient +-1.
SuperPolynomial realize_m(const SuperPartition& lambda, int n_vars);

// Monomial quasi-symmetric function in superspace, truncated to N variables.
SuperPolynomial realize_M(const DottedComposition& alpha, int n_vars);

// Reads M-basis coefficients off canonical monomials (support = {1..l});
// throws NotQuasiSymmetric if the residual p - sum c_a M_a is nonzero.
LinearCombination<DottedComposition> extract_M_expansion(const SuperPolynomial& p);

// Reads m-basis coefficients off canonical monomials; throws NotSymmetric
// if the residual is nonzero.
LinearCombination<SuperPartition> extract_m_expansion(const SuperPolynomial& p);

} // namespace supersym
