#include "frobalg/action.hpp"

#include "frobalg/arith.hpp"

#include <set>

namespace frobalg {

AlgebraElement apply_f_power(const AlgebraElement& x, unsigned n)
{
    const auto& params = *x.params();
    const Field& K = x.field();
    // omega^j for each weight j, raised to n
    std::vector<FieldElement> scale(params.p);
    const FieldElement wn = K.pow(params.omega, n);
    scale[0] = K.one();
    for (unsigned j = 1; j < params.p; ++j) scale[j] = K.mul(scale[j - 1], wn);
    AlgebraElement out(x.params());
    for (const auto& [b, c] : x.terms()) out.add_term(b, K.mul(c, scale[weight(b, params.p)]));
    return out;
}

AlgebraElement apply_f(const AlgebraElement& x) { return apply_f_power(x, 1); }

BasisElement h_image(const BasisElement& b, unsigned p, unsigned multiplier)
{
    if (b.is_a()) return BasisElement::a(b.head() * multiplier % p);
    std::vector<std::uint8_t> tail(b.tail().size());
    for (std::size_t i = 0; i < tail.size(); ++i) tail[i] = static_cast<std::uint8_t>(b.tail()[i] * multiplier % p);
    return BasisElement::v(b.head() * multiplier % p, std::move(tail));
}

AlgebraElement apply_h_power(const AlgebraElement& x, unsigned n)
{
    const auto& params = *x.params();
    const auto multiplier = static_cast<unsigned>(pow_mod(params.r, n, params.p));
    AlgebraElement out(x.params());
    for (const auto& [b, c] : x.terms()) out.add_term(h_image(b, params.p, multiplier), c);
    return out;
}

AlgebraElement apply_h(const AlgebraElement& x) { return apply_h_power(x, 1); }

namespace {

std::vector<AlgebraElement> degree_one_generators(const ParamsPtr& params)
{
    std::vector<AlgebraElement> gens;
    for (const auto& b : enumerate_basis(params->p, 1)) gens.emplace_back(params, b);
    return gens;
}

} // namespace

bool verify_frobenius_relation(const ConstructionParams& params)
{
    auto shared = std::make_shared<const ConstructionParams>(params);
    const unsigned p = params.p;
    const auto gens = degree_one_generators(shared);
    for (const auto& x : gens) {
        // right action: x^{h f h^{-1}}
        const AlgebraElement lhs = apply_h_power(apply_f(apply_h(x)), p - 2);
        const AlgebraElement rhs = apply_f_power(x, params.r);
        if (!(lhs == rhs)) return false;
    }
    auto is_identity = [&](auto&& map) {
        for (const auto& x : gens)
            if (!(map(x) == x)) return false;
        return true;
    };
    if (!is_identity([&](const AlgebraElement& x) { return apply_f_power(x, p); })) return false;
    for (unsigned j = 1; j < p; ++j)
        if (is_identity([&](const AlgebraElement& x) { return apply_f_power(x, j); })) return false;
    if (!is_identity([&](const AlgebraElement& x) { return apply_h_power(x, p - 1); })) return false;
    for (unsigned j = 1; j < p - 1; ++j)
        if (is_identity([&](const AlgebraElement& x) { return apply_h_power(x, j); })) return false;
    return true;
}

WeightDecomposition weight_decomposition(const AlgebraElement& x)
{
    WeightDecomposition parts;
    const unsigned p = x.params()->p;
    for (const auto& [b, c] : x.terms()) {
        auto it = parts.try_emplace(weight(b, p), x.params()).first;
        it->second.add_term(b, c);
    }
    return parts;
}

std::vector<BasisElement> kernel_centralizer_basis(unsigned p, unsigned k)
{
    std::vector<BasisElement> out;
    for (auto& b : enumerate_basis(p, k))
        if (weight(b, p) == 0) out.push_back(std::move(b));
    return out;
}

std::vector<BasisElement> h_orbit(const BasisElement& b, unsigned p, unsigned r)
{
    std::vector<BasisElement> orbit;
    orbit.reserve(p - 1);
    BasisElement cur = b;
    for (unsigned j = 0; j + 1 < p; ++j) {
        orbit.push_back(cur);
        cur = h_image(cur, p, r);
    }
    return orbit;
}

std::vector<AlgebraElement> complement_centralizer_basis(const ParamsPtr& params, unsigned k)
{
    std::vector<AlgebraElement> out;
    std::set<BasisElement> seen;
    for (const auto& b : enumerate_basis(params->p, k)) {
        if (seen.count(b)) continue;
        AlgebraElement sum(params);
        for (auto& m : h_orbit(b, params->p, params->r)) {
            sum.add_term(m, params->K().one());
            seen.insert(std::move(m));
        }
        out.push_back(std::move(sum));
    }
    return out;
}

std::size_t nonzero_weight_orbit_count(unsigned p, unsigned r, unsigned k)
{
    std::size_t count = 0;
    std::set<BasisElement> seen;
    for (const auto& b : enumerate_basis(p, k)) {
        if (seen.count(b)) continue;
        for (auto& m : h_orbit(b, p, r)) seen.insert(std::move(m));
        if (weight(b, p) != 0) ++count;
    }
    return count;
}

} // namespace frobalg
