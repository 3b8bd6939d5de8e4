#pragma once

#include "frobalg/checks.hpp"
#include "frobalg/quotient.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace frobalg {

using Rational = boost::multiprecision::cpp_rational;

/// Two-letter word; letter 0 is X, letter 1 is Y.
using Word = std::vector<std::uint8_t>;

/// coeff * [w_1, w_2, ..., w_m], left-normed. Words of length >= 2 start with X, Y.
struct BchTerm {
    Word word;
    Rational coeff;
};

/// log(exp X exp Y) truncated at total degree `truncation`.
struct BCHSeries {
    unsigned truncation = 0;
    std::vector<BchTerm> terms;  ///< sorted by length, then word

    std::string to_string() const;
};

/// Dynkin's commutator form, summed over all compositions and with like
/// left-normed words combined. Throws InvalidParameter for c = 0.
BCHSeries generate_bch(unsigned c);

/// "X", "[X,Y,Y]", ...
std::string word_to_string(const Word& w);

struct GroupElement {
    DenseVector coords;
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// The group on the underlying set of a quotient algebra with the truncated
/// BCH product. Never materialised; elements are coordinate vectors.
class LazardGroup {
public:
    /// truncation defaults to the nilpotency class (at least 1). A smaller value
    /// gives a non-associative product, which is useful as a negative control.
    /// Throws UnsupportedField if the characteristic is <= p or a series
    /// denominator is not invertible.
    explicit LazardGroup(std::shared_ptr<const QuotientAlgebra> q, std::optional<unsigned> truncation = {});

    const QuotientAlgebra& algebra() const { return *q_; }
    const BCHSeries& series() const { return series_; }
    std::size_t dimension() const { return q_->total_dimension(); }

    GroupElement identity() const;
    GroupElement multiply(const GroupElement& x, const GroupElement& y) const;
    GroupElement inverse(const GroupElement& x) const;
    /// x^{-1} y^{-1} x y.
    GroupElement commutator(const GroupElement& x, const GroupElement& y) const;
    GroupElement power(const GroupElement& x, std::uint64_t n) const;
    GroupElement lift_f(const GroupElement& x) const;
    GroupElement lift_h(const GroupElement& x) const;

    /// Seeded randomized checks: associativity, identity and inverses, q-th
    /// powers, the lifted automorphisms, their fixed points and the
    /// commutator depth of the degree-1 generators.
    CheckResults verify(unsigned trials, std::uint64_t seed) const;

private:
    struct Node {
        int child[2] = {-1, -1};
        FieldElement coeff{0};
        bool terminal = false;
    };

    std::shared_ptr<const QuotientAlgebra> q_;
    BCHSeries series_;
    std::vector<Node> trie_;
};

/// Builds the quotient for params and runs LazardGroup::verify on it.
CheckResults verify_group(const ParamsPtr& params, unsigned trials, std::uint64_t seed);

} // namespace frobalg
