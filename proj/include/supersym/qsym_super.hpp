#pragma once

#include "supersym/combinatorics.hpp"
#include "supersym/dual_number.hpp"
#include "supersym/linear_combination.hpp"
#include "supersym/superpoly.hpp"
#include "supersym/sym_super.hpp"

#include <vector>

namespace supersym {

// Quasi-symmetric functions in superspace, M-basis coefficients.
using QSymSuper = LinearCombination<DottedComposition>;
using QSymTensor = LinearCombination<std::vector<DottedComposition>>;

namespace sqsym {

QSymSuper M(const DottedComposition& alpha);
QSymSuper unit();

int max_length(const QSymSuper& f);

SuperPolynomial realize(const QSymSuper& f, int n_vars);

// Product via realization at N = max_length(f) + max_length(g).
QSymSuper mul(const QSymSuper& f, const QSymSuper& g);

// Deconcatenation: Delta(M_a) = sum_k M_(a_1..a_k) (x) M_(a_k+1..a_l),
// no signs.
QSymTensor coproduct(const QSymSuper& f);

// M_() -> 1, M_(r) -> 1, M_(s dotted) -> eps, longer -> 0.
DualNumber zeta_Q(const QSymSuper& f);

Rational counit(const QSymSuper& f);

// The inclusion Lambda -> sQSym: M-expansion of the realization.
QSymSuper include_lambda(const SymSuper& f);

// Partial inverse of the inclusion; throws NotSymmetric when the
// M-coefficients are not constant (with sort signs) on superpartition
// classes, or when a repeated-dotted composition carries a coefficient.
SymSuper is_symmetric(const QSymSuper& f);

} // namespace sqsym

} // namespace supersym
