#pragma once

#include "supersym/combinatorics.hpp"
#include "supersym/dual_number.hpp"
#include "supersym/linear_combination.hpp"
#include "supersym/qsym_super.hpp"

namespace supersym {

// Noncommutative symmetric functions in superspace, H-basis coefficients.
// Minimal model of the graded dual of sQSym: free concatenation product,
// duality pairing, supercharacter. No coproduct here.
using NSymSuper = LinearCombination<DottedComposition, struct NSymTag>;

namespace snsym {

NSymSuper H(const DottedComposition& alpha);
NSymSuper unit();

// H_a * H_b = H_(a concat b): bilinear, noncommutative, no signs.
NSymSuper mul(const NSymSuper& f, const NSymSuper& g);

// Bilinear extension of (H_a, M_b) = delta_ab.
Rational pair(const NSymSuper& h, const QSymSuper& f);

// Multiplicative on generators: H_1 -> 1, H_r -> 0 (r >= 2),
// Ht_0 -> eps, Ht_s -> 0 (s >= 1).
DualNumber zeta_N(const NSymSuper& f);

} // namespace snsym

} // namespace supersym
