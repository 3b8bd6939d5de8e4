#include "frobalg/ideals.hpp"

#include "frobalg/errors.hpp"

#include <algorithm>
#include <mutex>

namespace frobalg {

namespace {

// succ[ord * (p-1) + (j-1)] = ordinal of [b_ord, a_j] in degree k+1, for k >= 2.
const std::vector<std::uint32_t>& successor_table(unsigned p, unsigned k)
{
    static std::mutex mutex;
    static std::map<std::pair<unsigned, unsigned>, std::vector<std::uint32_t>> cache;
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.try_emplace({p, k});
    if (inserted) {
        const auto basis = enumerate_basis(p, k);
        auto& table = it->second;
        table.resize(basis.size() * (p - 1));
        for (std::size_t ord = 0; ord < basis.size(); ++ord)
            for (unsigned j = 1; j < p; ++j)
                table[ord * (p - 1) + (j - 1)] = static_cast<std::uint32_t>(basis_index(basis[ord].with_a(j), p).ordinal);
    }
    return it->second;
}

SparseRow normalize(std::vector<Entry> entries, const Field& K)
{
    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) { return x.col < y.col; });
    SparseRow out;
    for (const auto& e : entries) {
        if (!out.empty() && out.back().col == e.col)
            out.back().val = K.add(out.back().val, e.val);
        else
            out.push_back(e);
        if (out.back().val == K.zero()) out.pop_back();
    }
    return out;
}

} // namespace

SparseRow to_row(const AlgebraElement& x, unsigned k)
{
    const unsigned p = x.params()->p;
    SparseRow row;
    row.reserve(x.size());
    for (const auto& [b, c] : x.terms()) {
        if (b.degree() != k)
            throw InvalidArgument("element is not homogeneous of degree " + std::to_string(k) + ": contains " + b.to_string());
        row.push_back({static_cast<std::uint32_t>(basis_index(b, p).ordinal), c});
    }
    // map order within one degree is the enumeration order
    return row;
}

AlgebraElement from_row(const ParamsPtr& params, unsigned k, const SparseRow& row)
{
    AlgebraElement out(params);
    for (const auto& e : row) out.add_term(basis_element(params->p, k, e.col), e.val);
    return out;
}

std::vector<SparseRow> bracket_with_generators(const ParamsPtr& params, unsigned k, const SparseRow& row)
{
    const unsigned p = params->p;
    const Field& K = params->K();
    std::vector<SparseRow> out;
    if (k >= 2) {
        const auto& succ = successor_table(p, k);
        for (unsigned j = 1; j < p; ++j) {
            std::vector<Entry> entries;
            entries.reserve(row.size());
            for (const auto& e : row) entries.push_back({succ[e.col * (p - 1) + (j - 1)], e.val});
            auto r = normalize(std::move(entries), K);
            if (!r.empty()) out.push_back(std::move(r));
        }
        return out;
    }
    const auto x = from_row(params, 1, row);
    for (const auto& g : enumerate_basis(p, 1)) {
        const auto y = bracket(x, AlgebraElement(params, g));
        if (!y.is_zero()) out.push_back(to_row(y, 2));
    }
    return out;
}

std::size_t GradedSubspace::dimension(unsigned k) const
{
    auto it = layers.find(k);
    return it == layers.end() ? 0 : it->second.rank();
}

const EchelonForm& GradedSubspace::layer(unsigned k) const
{
    auto it = layers.find(k);
    if (it == layers.end()) throw InvalidArgument("degree " + std::to_string(k) + " not computed");
    return it->second;
}

EchelonForm echelonize(const std::vector<AlgebraElement>& vectors, const ParamsPtr& params, unsigned k)
{
    EchelonForm ech(params->field, layer_size(params->p, k));
    for (const auto& v : vectors) ech.insert(to_row(v, k));
    ech.finalize();
    return ech;
}

EchelonForm ideal_I_layer(const ParamsPtr& params, unsigned k, const EchelonForm* previous)
{
    const unsigned p = params->p;
    EchelonForm ech(params->field, layer_size(p, k));
    if (k == 1) return ech;
    if (previous)
        for (const auto& row : previous->rows())
            for (const auto& r : bracket_with_generators(params, k - 1, row)) ech.insert(r);
    const Field& K = params->K();
    for (const auto& b : kernel_centralizer_basis(p, k))
        ech.insert({{static_cast<std::uint32_t>(basis_index(b, p).ordinal), K.one()}});
    ech.finalize();
    return ech;
}

bool in_ideal_I(const BasisElement& b, unsigned p)
{
    if (b.is_a() || b.tail().empty()) return false;
    // reachable[t]: some sub-multiset S of the tail seen so far has head + sum(S) = t mod p
    std::vector<std::uint8_t> reachable(p, 0), next(p);
    reachable[b.head() % p] = 1;
    for (auto m : b.tail()) {
        next = reachable;
        for (unsigned t = 0; t < p; ++t)
            if (reachable[t]) next[(t + m) % p] = 1;
        reachable.swap(next);
        if (reachable[0]) return true;
    }
    return false;
}

std::vector<BasisElement> ideal_I_combinatorial(unsigned p, unsigned k)
{
    std::vector<BasisElement> out;
    for (auto& b : enumerate_basis(p, k))
        if (in_ideal_I(b, p)) out.push_back(std::move(b));
    return out;
}

Integer bound_I(unsigned p, unsigned k)
{
    if (k <= 1) return 0;
    return Integer(k - 1) * integer_pow(Integer(p - 1), k - 1);
}

std::vector<AlgebraElement> derived_complement_generators(const ParamsPtr& params, unsigned k)
{
    if (k < 2) throw InvalidParameter("derived_complement_generators requires k >= 2");
    AlgebraElement sigma_a(params);
    for (unsigned i = 1; i < params->p; ++i) sigma_a.add_term(BasisElement::a(i), params->K().one());
    std::vector<AlgebraElement> out;
    for (const auto& x : complement_centralizer_basis(params, k - 1)) {
        auto g = bracket(x, sigma_a);
        if (!g.is_zero()) out.push_back(std::move(g));
    }
    return out;
}

EchelonForm ideal_J_layer(const ParamsPtr& params, unsigned k, const EchelonForm* previous)
{
    const unsigned p = params->p;
    EchelonForm ech(params->field, layer_size(p, k));
    if (k == 1) return ech;
    if (previous)
        for (const auto& row : previous->rows())
            for (const auto& r : bracket_with_generators(params, k - 1, row)) ech.insert(r);
    for (const auto& g : derived_complement_generators(params, k))
        for (const auto& [w, part] : weight_decomposition(g)) ech.insert(to_row(part, k));
    ech.finalize();
    return ech;
}

Integer bound_J(unsigned p, unsigned k)
{
    if (k <= 1) return 0;
    Integer sum = 0;
    for (unsigned j = 0; j + 2 <= k; ++j) sum += integer_pow(Integer(p - 1), k - 2 - j) * binomial(j + p - 2, j);
    return Integer(p) * sum;
}

GradedSubspace compute_ideal_I(const ParamsPtr& params, unsigned max_degree)
{
    GradedSubspace g{params, {}};
    for (unsigned k = 1; k <= max_degree; ++k) {
        const EchelonForm* prev = k > 1 ? &g.layers.at(k - 1) : nullptr;
        g.layers.emplace(k, ideal_I_layer(params, k, prev));
    }
    return g;
}

GradedSubspace compute_ideal_J(const ParamsPtr& params, unsigned max_degree)
{
    GradedSubspace g{params, {}};
    for (unsigned k = 1; k <= max_degree; ++k) {
        const EchelonForm* prev = k > 1 ? &g.layers.at(k - 1) : nullptr;
        g.layers.emplace(k, ideal_J_layer(params, k, prev));
    }
    return g;
}

EchelonForm sum_of_layers(const EchelonForm& a, const EchelonForm& b)
{
    if (a.ncols() != b.ncols()) throw InvalidArgument("layers of different degrees");
    EchelonForm ech(a.field_ptr(), a.ncols());
    for (const auto& r : a.rows()) ech.insert(r);
    for (const auto& r : b.rows()) ech.insert(r);
    ech.finalize();
    return ech;
}

} // namespace frobalg
