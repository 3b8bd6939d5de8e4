#pragma once

#include "frobalg/algebra.hpp"

#include <map>
#include <vector>

namespace frobalg {

// The Frobenius group C_p x| C_{p-1} acts on the right: x^{fg} = (x^f)^g.
// f scales a monomial of weight j by omega^j; h multiplies every index by r mod p.

/// Weight j (mod p) -> weight-j part. Zero parts are omitted.
using WeightDecomposition = std::map<unsigned, AlgebraElement>;

AlgebraElement apply_f(const AlgebraElement& x);
AlgebraElement apply_h(const AlgebraElement& x);

/// x^{f^n}.
AlgebraElement apply_f_power(const AlgebraElement& x, unsigned n);
/// x^{h^n}; n = p - 2 gives h^{-1}.
AlgebraElement apply_h_power(const AlgebraElement& x, unsigned n);

/// Image of a monomial under h^n (multiplier r^n mod p), tail re-sorted.
BasisElement h_image(const BasisElement& b, unsigned p, unsigned multiplier);

/// Checks f^{h^{-1}} = f^r on the degree-1 generators, and that f and h have
/// orders exactly p and p-1. The order condition is what fails when r is not
/// a primitive root.
bool verify_frobenius_relation(const ConstructionParams& params);

WeightDecomposition weight_decomposition(const AlgebraElement& x);

/// Weight-0 monomials of degree k: a basis of C_{L_p}(C_p) in that degree.
std::vector<BasisElement> kernel_centralizer_basis(unsigned p, unsigned k);

/// b, b^h, ..., b^{h^{p-2}}.
std::vector<BasisElement> h_orbit(const BasisElement& b, unsigned p, unsigned r);

/// One orbit sum per h-orbit on the degree-k basis, ordered by least orbit member.
std::vector<AlgebraElement> complement_centralizer_basis(const ParamsPtr& params, unsigned k);

/// Number of h-orbits on the degree-k basis consisting of nonzero-weight monomials.
std::size_t nonzero_weight_orbit_count(unsigned p, unsigned r, unsigned k);

} // namespace frobalg
