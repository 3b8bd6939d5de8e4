#include "frobalg/field.hpp"

#include "frobalg/arith.hpp"
#include "frobalg/errors.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace frobalg {

namespace {

constexpr std::uint64_t kMaxExtensionSize = 1u << 24;

std::string poly_to_string(const std::vector<std::uint32_t>& c)
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!first) out << '+';
        first = false;
        if (i == 0) {
            out << c[i];
            continue;
        }
        if (c[i] != 1) out << c[i];
        out << 'x';
        if (i > 1) out << '^' << i;
    }
    if (first) out << '0';
    return out.str();
}

// Remainder of a modulo a monic b, both low degree first, coefficients mod s.
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> a, std::span<const std::uint32_t> b, std::uint32_t s)
{
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint32_t lead = a.back();
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i <= db; ++i) {
                const std::uint64_t t = static_cast<std::uint64_t>(lead) * b[i] % s;
                a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + s - t) % s);
            }
        }
        a.pop_back();
    }
    return a;
}

} // namespace

bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t s)
{
    const std::size_t deg = monic.size() - 1;
    if (deg < 1 || monic.back() != 1) throw InvalidParameter("is_irreducible: polynomial must be monic of degree >= 1");
    if (deg == 1) return true;
    std::vector<std::uint32_t> a(monic.begin(), monic.end());
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        // Every monic polynomial of degree d: s^d choices for the lower coefficients.
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= s;
        std::vector<std::uint32_t> f(d + 1, 0);
        f[d] = 1;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                f[i] = static_cast<std::uint32_t>(c % s);
                c /= s;
            }
            const auto rem = poly_rem(a, f, s);
            if (std::all_of(rem.begin(), rem.end(), [](std::uint32_t x) { return x == 0; })) return false;
        }
    }
    return true;
}

Field Field::prime(std::uint64_t q)
{
    if (q < 2 || !is_prime(q)) throw InvalidParameter("field order " + std::to_string(q) + " is not prime");
    if (q > std::numeric_limits<std::uint32_t>::max()) throw InvalidParameter("field order too large");
    Field f;
    f.s_ = static_cast<std::uint32_t>(q);
    f.e_ = 1;
    f.size_ = q;
    f.modulus_ = {0, 1};
    f.generator_ = {static_cast<std::uint32_t>(q == 2 ? 1 : smallest_primitive_root(q))};
    return f;
}

Field Field::extension(std::uint64_t s, unsigned e)
{
    if (s < 2 || !is_prime(s)) throw InvalidParameter("characteristic " + std::to_string(s) + " is not prime");
    if (e < 1) throw InvalidParameter("extension degree must be >= 1");
    if (e == 1) return prime(s);
    std::uint64_t size = 1;
    for (unsigned i = 0; i < e; ++i) {
        size *= s;
        if (size > kMaxExtensionSize) throw InvalidParameter("extension field too large for table arithmetic");
    }
    Field f;
    f.s_ = static_cast<std::uint32_t>(s);
    f.e_ = e;
    f.size_ = size;
    // Monic polynomials of degree e in increasing code order of their lower part,
    // which is lexicographic order read from the top coefficient down.
    std::vector<std::uint32_t> m(e + 1, 0);
    m[e] = 1;
    bool found = false;
    for (std::uint64_t code = 0; code < size && !found; ++code) {
        std::uint64_t c = code;
        for (unsigned i = 0; i < e; ++i) {
            m[i] = static_cast<std::uint32_t>(c % s);
            c /= s;
        }
        if (m[0] != 0 && is_irreducible(m, f.s_)) found = true;
    }
    if (!found) throw InvariantViolation("no irreducible polynomial found");
    f.modulus_ = m;
    f.build_tables();
    return f;
}

FieldElement Field::poly_mul(FieldElement a, FieldElement b) const
{
    const auto ca = coefficients(a);
    const auto cb = coefficients(b);
    std::vector<std::uint32_t> prod(2 * e_ - 1, 0);
    for (unsigned i = 0; i < e_; ++i)
        for (unsigned j = 0; j < e_; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % s_);
    const auto rem = poly_rem(std::move(prod), modulus_, s_);
    std::vector<std::uint32_t> out(e_, 0);
    std::copy(rem.begin(), rem.end(), out.begin());
    return from_coefficients(out);
}

void Field::build_tables()
{
    const auto factors = prime_factors(size_ - 1);
    auto power = [&](FieldElement g, std::uint64_t n) {
        FieldElement r = one();
        while (n) {
            if (n & 1) r = poly_mul(r, g);
            g = poly_mul(g, g);
            n >>= 1;
        }
        return r;
    };
    for (std::uint32_t code = 2; code < size_; ++code) {
        const FieldElement g{code};
        const bool gen = std::none_of(factors.begin(), factors.end(),
                                      [&](std::uint64_t f) { return power(g, (size_ - 1) / f) == one(); });
        if (gen) {
            generator_ = g;
            break;
        }
    }
    exp_.assign(size_ - 1, 0);
    log_.assign(size_, 0);
    FieldElement x = one();
    for (std::uint64_t i = 0; i + 1 < size_; ++i) {
        exp_[i] = x.code;
        log_[x.code] = static_cast<std::uint32_t>(i);
        x = poly_mul(x, generator_);
    }
    if (x != one()) throw InvariantViolation("generator search produced a non-generator");
}

FieldElement Field::from_int(std::int64_t v) const
{
    std::int64_t r = v % static_cast<std::int64_t>(s_);
    if (r < 0) r += s_;
    return {static_cast<std::uint32_t>(r)};
}

FieldElement Field::from_coefficients(std::span<const std::uint32_t> coeffs) const
{
    if (coeffs.size() > e_) throw InvalidArgument("too many coefficients for " + describe());
    std::uint64_t code = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) code = code * s_ + coeffs[i] % s_;
    return {static_cast<std::uint32_t>(code)};
}

std::vector<std::uint32_t> Field::coefficients(FieldElement a) const
{
    std::vector<std::uint32_t> out(e_, 0);
    std::uint32_t c = a.code;
    for (unsigned i = 0; i < e_; ++i) {
        out[i] = c % s_;
        c /= s_;
    }
    return out;
}

FieldElement Field::add(FieldElement a, FieldElement b) const
{
    if (e_ == 1) {
        const std::uint64_t t = static_cast<std::uint64_t>(a.code) + b.code;
        return {static_cast<std::uint32_t>(t >= s_ ? t - s_ : t)};
    }
    if (s_ == 2) return {a.code ^ b.code};
    std::uint32_t x = a.code, y = b.code, out = 0, place = 1;
    for (unsigned i = 0; i < e_; ++i) {
        out += ((x % s_ + y % s_) % s_) * place;
        x /= s_;
        y /= s_;
        place *= s_;
    }
    return {out};
}

FieldElement Field::neg(FieldElement a) const
{
    if (e_ == 1) return {a.code == 0 ? 0 : s_ - a.code};
    if (s_ == 2) return a;
    std::uint32_t x = a.code, out = 0, place = 1;
    for (unsigned i = 0; i < e_; ++i) {
        out += ((s_ - x % s_) % s_) * place;
        x /= s_;
        place *= s_;
    }
    return {out};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const
{
    if (e_ == 1) return {a.code >= b.code ? a.code - b.code : static_cast<std::uint32_t>(a.code + (static_cast<std::uint64_t>(s_) - b.code))};
    return add(a, neg(b));
}

FieldElement Field::mul(FieldElement a, FieldElement b) const
{
    if (e_ == 1) return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.code) * b.code % s_)};
    if (a.code == 0 || b.code == 0) return zero();
    std::uint64_t l = static_cast<std::uint64_t>(log_[a.code]) + log_[b.code];
    if (l >= size_ - 1) l -= size_ - 1;
    return {exp_[l]};
}

FieldElement Field::inv(FieldElement a) const
{
    if (a.code == 0) throw DivisionByZero("inverse of zero in " + describe());
    if (e_ == 1) return {static_cast<std::uint32_t>(pow_mod(a.code, s_ - 2, s_))};
    const std::uint64_t l = log_[a.code];
    return {exp_[l == 0 ? 0 : size_ - 1 - l]};
}

FieldElement Field::pow(FieldElement a, std::uint64_t n) const
{
    FieldElement r = one();
    while (n) {
        if (n & 1) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

std::uint64_t Field::order(FieldElement a) const
{
    if (a.code == 0) throw DivisionByZero("order of zero");
    std::uint64_t n = size_ - 1;
    for (auto f : prime_factors(size_ - 1))
        while (n % f == 0 && pow(a, n / f) == one()) n /= f;
    return n;
}

std::string Field::to_string(FieldElement a) const
{
    if (e_ == 1) return std::to_string(a.code);
    return poly_to_string(coefficients(a));
}

std::string Field::describe() const
{
    if (e_ == 1) return "GF(" + std::to_string(s_) + ")";
    return "GF(" + std::to_string(s_) + "^" + std::to_string(e_) + ")";
}

std::string Field::modulus_string() const { return poly_to_string(modulus_); }

Field make_prime_field(std::uint64_t q) { return Field::prime(q); }

Field make_extension_field(std::uint64_t s, unsigned e) { return Field::extension(s, e); }

FieldElement root_of_unity(const Field& field, std::uint64_t p)
{
    const std::uint64_t n = field.cardinality() - 1;
    if (p == 0 || n % p != 0)
        throw NoRootOfUnity(field.describe() + " has no primitive " + std::to_string(p) + "-th root of unity");
    return field.pow(field.generator(), n / p);
}

namespace {

void require_odd_prime(unsigned p)
{
    if (p < 3 || !is_prime(p)) throw InvalidParameter("p must be a prime >= 3, got " + std::to_string(p));
}

} // namespace

ParamsPtr params_for_field(unsigned p, Field field)
{
    require_odd_prime(p);
    if (field.characteristic() == p) throw InvalidParameter("field characteristic must differ from p");
    auto params = std::make_shared<ConstructionParams>();
    params->p = p;
    params->omega = root_of_unity(field, p);
    params->field = std::make_shared<const Field>(std::move(field));
    params->r = static_cast<unsigned>(smallest_primitive_root(p));
    return params;
}

ParamsPtr find_parameters(unsigned p, FieldMode mode)
{
    require_odd_prime(p);
    if (mode == FieldMode::lazard) {
        std::uint64_t q = p + 1;
        while (!(is_prime(q) && q % p == 1)) ++q;
        return params_for_field(p, Field::prime(q));
    }
    const std::uint64_t s = prime_factors(p - 1).front();
    const auto e = static_cast<unsigned>(multiplicative_order(s, p));
    return params_for_field(p, Field::extension(s, e));
}

std::string validate_params(const ConstructionParams& params)
{
    const unsigned p = params.p;
    if (p < 3 || !is_prime(p)) return "p is not a prime >= 3";
    if (!params.field) return "missing field";
    const Field& K = *params.field;
    if (K.characteristic() == p) return "field characteristic equals p";
    if (K.pow(params.omega, p) != K.one()) return "omega^p != 1";
    for (unsigned j = 1; j < p; ++j)
        if (K.pow(params.omega, j) == K.one()) return "omega has order " + std::to_string(j) + " < p";
    if (params.r <= 1 || params.r >= p) return "r out of range (1, p)";
    if (multiplicative_order(params.r, p) != p - 1) return "r is not a primitive root mod p";
    return {};
}

} // namespace frobalg
