#pragma once

#include "frobalg/action.hpp"
#include "frobalg/echelon.hpp"

#include <map>
#include <vector>

namespace frobalg {

/// Coordinates of a degree-k homogeneous element in the canonical degree-k basis.
/// Throws InvalidArgument if x has a term of another degree.
SparseRow to_row(const AlgebraElement& x, unsigned k);

AlgebraElement from_row(const ParamsPtr& params, unsigned k, const SparseRow& row);

/// [row, g] for every degree-1 generator g, as rows over the degree-(k+1) basis.
/// For k >= 2 only the a_j contribute. Zero results are dropped.
std::vector<SparseRow> bracket_with_generators(const ParamsPtr& params, unsigned k, const SparseRow& row);

/// A homogeneous graded subspace of L_p, stored degree by degree.
struct GradedSubspace {
    ParamsPtr params;
    std::map<unsigned, EchelonForm> layers;

    std::size_t dimension(unsigned k) const;
    const EchelonForm& layer(unsigned k) const;
};

/// Reduced echelon basis of span(vectors); all vectors must be homogeneous of degree k.
EchelonForm echelonize(const std::vector<AlgebraElement>& vectors, const ParamsPtr& params, unsigned k);

/// I_p in degree k from I_p in degree k-1: [previous, L_{p,1}] + weight-0 monomials.
/// previous may be null for k = 1 (the layer is then zero).
EchelonForm ideal_I_layer(const ParamsPtr& params, unsigned k, const EchelonForm* previous);

/// Degree-k brackets [v_{i0}, a_M] for which some nonempty sub-multiset S of M has
/// i0 + sum(S) = 0 mod p, decided by a subset-sum pass over residues.
std::vector<BasisElement> ideal_I_combinatorial(unsigned p, unsigned k);

/// The subset-sum membership test used by ideal_I_combinatorial.
bool in_ideal_I(const BasisElement& b, unsigned p);

/// (k-1)(p-1)^{k-1}; 0 for k = 1.
Integer bound_I(unsigned p, unsigned k);

/// [x, a_1 + ... + a_{p-1}] for each orbit sum x of degree k-1; zero results dropped.
std::vector<AlgebraElement> derived_complement_generators(const ParamsPtr& params, unsigned k);

/// J_p in degree k: [previous, a_j] for all j, plus every weight part of the
/// degree-k derived complement generators.
EchelonForm ideal_J_layer(const ParamsPtr& params, unsigned k, const EchelonForm* previous);

/// p * sum_{j=0}^{k-2} (p-1)^{k-2-j} C(j+p-2, j); 0 for k = 1.
Integer bound_J(unsigned p, unsigned k);

GradedSubspace compute_ideal_I(const ParamsPtr& params, unsigned max_degree);
GradedSubspace compute_ideal_J(const ParamsPtr& params, unsigned max_degree);

/// Span of the given layers' rows in degree k.
EchelonForm sum_of_layers(const EchelonForm& a, const EchelonForm& b);

} // namespace frobalg
