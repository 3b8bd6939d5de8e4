#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace frobalg {

/// An element of a finite field, stored as its packed coefficient vector.
///
/// For GF(s^e) the code is sum_i c_i s^i where c_i is the coefficient of x^i in
/// the canonical residue, so code order coincides with lexicographic order on
/// coefficient vectors read from the highest degree down. For prime fields the
/// code is the residue itself.
struct FieldElement {
    std::uint32_t code = 0;

    friend constexpr bool operator==(FieldElement, FieldElement) = default;
    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// GF(s^e) with a fixed modulus. Immutable after construction.
class Field {
public:
    /// GF(q); throws InvalidParameter if q is not prime or does not fit in 32 bits.
    static Field prime(std::uint64_t q);

    /// GF(s^e) with the lexicographically smallest monic irreducible modulus.
    static Field extension(std::uint64_t s, unsigned e);

    std::uint32_t characteristic() const { return s_; }
    unsigned degree() const { return e_; }
    std::uint64_t cardinality() const { return size_; }
    bool is_prime_field() const { return e_ == 1; }

    /// Monic modulus, low degree first, length e + 1. {0, 1} (i.e. "x") for prime fields.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    /// Least multiplicative generator in code order.
    FieldElement generator() const { return generator_; }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    /// Image of an integer in the prime subfield.
    FieldElement from_int(std::int64_t v) const;
    FieldElement from_coefficients(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coefficients(FieldElement a) const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
    FieldElement pow(FieldElement a, std::uint64_t n) const;
    /// a - c * b, the elimination kernel.
    FieldElement sub_mul(FieldElement a, FieldElement c, FieldElement b) const { return sub(a, mul(c, b)); }

    /// Multiplicative order of a nonzero element.
    std::uint64_t order(FieldElement a) const;

    /// Integers for prime fields, polynomial strings such as "x^3+x+1" otherwise.
    std::string to_string(FieldElement a) const;
    /// "GF(7)" or "GF(2^4)".
    std::string describe() const;
    /// Modulus rendered as a polynomial string.
    std::string modulus_string() const;

    bool operator==(const Field& o) const { return s_ == o.s_ && e_ == o.e_ && modulus_ == o.modulus_; }

private:
    Field() = default;
    void build_tables();
    FieldElement poly_mul(FieldElement a, FieldElement b) const;

    std::uint32_t s_ = 2;
    unsigned e_ = 1;
    std::uint64_t size_ = 2;
    std::vector<std::uint32_t> modulus_;
    FieldElement generator_{1};
    // Discrete log tables, extension fields only.
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

/// True iff the monic polynomial (low degree first) is irreducible over GF(s).
/// Exhaustive search for monic factors of degree up to deg/2.
bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t s);

// Named entry points for the field operations.
Field make_prime_field(std::uint64_t q);
Field make_extension_field(std::uint64_t s, unsigned e);

/// g^{(|K|-1)/p} for the least generator g. Throws NoRootOfUnity if p does not divide |K|-1.
FieldElement root_of_unity(const Field& field, std::uint64_t p);

/// Everything the construction of L_p depends on.
struct ConstructionParams {
    unsigned p = 0;
    std::shared_ptr<const Field> field;
    FieldElement omega;
    unsigned r = 0;

    const Field& K() const { return *field; }
};

using ParamsPtr = std::shared_ptr<const ConstructionParams>;

enum class FieldMode {
    lazard,      ///< least prime q = 1 (mod p) with q > p
    noncoprime,  ///< GF(s^e), s the least prime dividing p-1
};

/// Deterministic parameters for p in the given mode. Throws InvalidParameter for p < 3 or composite p.
ParamsPtr find_parameters(unsigned p, FieldMode mode);

/// Parameters over a caller-chosen field; omega and r chosen as in find_parameters.
ParamsPtr params_for_field(unsigned p, Field field);

/// Empty string if the parameters satisfy every invariant, else a description of the first violation.
std::string validate_params(const ConstructionParams& params);

} // namespace frobalg
