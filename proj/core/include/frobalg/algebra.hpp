#pragma once

#include "frobalg/basis.hpp"
#include "frobalg/field.hpp"

#include <map>
#include <string>

namespace frobalg {

/// An element of L_p over the field of its construction parameters.
/// Sparse; zero coefficients are never stored.
class AlgebraElement {
public:
    using Terms = std::map<BasisElement, FieldElement>;

    explicit AlgebraElement(ParamsPtr params);
    AlgebraElement(ParamsPtr params, const BasisElement& b, FieldElement c);
    AlgebraElement(ParamsPtr params, const BasisElement& b);

    const ParamsPtr& params() const { return params_; }
    const Field& field() const { return params_->K(); }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of b (zero if absent).
    FieldElement coefficient(const BasisElement& b) const;

    /// Adds c * b in place.
    void add_term(const BasisElement& b, FieldElement c);

    AlgebraElement operator+(const AlgebraElement& y) const;
    AlgebraElement operator-(const AlgebraElement& y) const;
    AlgebraElement operator-() const;
    AlgebraElement scaled(FieldElement c) const;

    bool operator==(const AlgebraElement& y) const;

    /// "3*[v1,a1,a2] + 5*[v2,a1,a1]", terms in canonical basis order; "0" for zero.
    std::string to_string() const;

    /// Throws InvalidArgument unless y was built over equivalent parameters.
    void check_compatible(const AlgebraElement& y) const;

private:

    ParamsPtr params_;
    Terms terms_;
};

/// Lie bracket of L_p: [a_i, a_j] = 0, [I_V, I_V] = 0 and
/// [[v_{i0}, a_M], a_j] = [v_{i0}, a_{M + j}] with the a-indices re-sorted.
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

/// Monomial bracket: returns false when the bracket vanishes; otherwise sets
/// out and sign (+1 or -1).
bool bracket_monomials(const BasisElement& x, const BasisElement& y, BasisElement& out, int& sign);

/// Restriction of x to its degree-k terms.
AlgebraElement homogeneous_component(const AlgebraElement& x, unsigned k);

// Convenience constructors for generators.
AlgebraElement gen_a(const ParamsPtr& params, unsigned i);
AlgebraElement gen_v(const ParamsPtr& params, unsigned i);

} // namespace frobalg
