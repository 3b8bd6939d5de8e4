#pragma once

#include "frobalg/arith.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace frobalg {

/// A monomial of L_p: either a generator a_i, or a left-normed bracket
/// [v_{i0}, a_{m1}, ..., a_{mt}] with m1 <= ... <= mt. The generator v_{i0}
/// is the bracket with an empty tail.
class BasisElement {
public:
    static BasisElement a(unsigned i);
    static BasisElement v(unsigned i0, std::vector<std::uint8_t> tail = {});

    bool is_a() const { return is_a_; }
    unsigned head() const { return head_; }
    const std::vector<std::uint8_t>& tail() const { return tail_; }
    unsigned degree() const { return is_a_ ? 1 : 1 + static_cast<unsigned>(tail_.size()); }

    /// [this, a_j]; the tail stays sorted. Only meaningful for v-type elements.
    BasisElement with_a(unsigned j) const;

    /// "a1", "v2", "[v1,a1,a2]".
    std::string to_string() const;

    /// Canonical order: degree, then a before v, then head, then tail lexicographically.
    friend std::strong_ordering operator<=>(const BasisElement& x, const BasisElement& y);
    friend bool operator==(const BasisElement&, const BasisElement&) = default;

private:
    BasisElement() = default;
    bool is_a_ = false;
    std::uint8_t head_ = 0;
    std::vector<std::uint8_t> tail_;
};

struct BasisIndex {
    unsigned degree;
    std::size_t ordinal;
    friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

/// The degree-k monomials in canonical order: a_1..a_{p-1}, v_1..v_{p-1} for
/// k = 1; all brackets of length k ordered by head then tail otherwise.
std::vector<BasisElement> enumerate_basis(unsigned p, unsigned k);

/// dim L_{p,k}: 2(p-1) for k = 1, (p-1) C(k+p-3, k-1) for k >= 2.
Integer dimension_formula(unsigned p, unsigned k);

/// Same value as a machine integer; throws InvalidParameter if it does not fit.
std::size_t layer_size(unsigned p, unsigned k);

/// Sum of indices mod p.
unsigned weight(const BasisElement& b, unsigned p);

/// Position of b in enumerate_basis(p, b.degree()).
BasisIndex basis_index(const BasisElement& b, unsigned p);

/// Inverse of basis_index.
BasisElement basis_element(unsigned p, unsigned degree, std::size_t ordinal);

/// Throws InvalidParameter unless p is a prime >= 3.
void require_valid_p(unsigned p);

/// True iff every index of b lies in [1, p-1].
bool valid_for(const BasisElement& b, unsigned p);

} // namespace frobalg
