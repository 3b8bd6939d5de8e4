#include "frobalg/quotient.hpp"

#include "frobalg/arith.hpp"
#include "frobalg/errors.hpp"

#include <algorithm>
#include <future>

namespace frobalg {

namespace {

QuotientLayer make_layer(unsigned k, std::size_t l, EchelonForm i_layer, EchelonForm j_layer)
{
    EchelonForm t = sum_of_layers(i_layer, j_layer);
    QuotientLayer layer{k, l, std::move(i_layer), std::move(j_layer), std::move(t), {}, {}, 0};
    layer.reps = layer.t_layer.free_columns();
    layer.rep_pos.assign(l, -1);
    for (std::size_t i = 0; i < layer.reps.size(); ++i) layer.rep_pos[layer.reps[i]] = static_cast<std::int32_t>(i);
    return layer;
}

} // namespace

QuotientAlgebra QuotientAlgebra::build(ParamsPtr params, const QuotientOptions& options)
{
    if (!params) throw InvalidArgument("missing construction parameters");
    require_valid_p(params->p);
    if (options.zero_ideal && !options.max_degree) throw InvalidArgument("zero_ideal requires max_degree");
    if (options.cap_degree && *options.cap_degree < 1) throw InvalidArgument("cap_degree must be >= 1");
    const unsigned p = params->p;
    const unsigned extra = options.max_degree.value_or(0);

    QuotientAlgebra q;
    q.params_ = params;
    std::optional<unsigned> first_zero;
    for (unsigned k = 1;; ++k) {
        if (first_zero && k > std::max(*first_zero, extra)) break;
        if (options.zero_ideal && k > extra) break;
        if (options.cap_degree && k > *options.cap_degree) break;
        const std::size_t l = layer_size(p, k);
        QuotientLayer layer = [&] {
            if (options.zero_ideal)
                return make_layer(k, l, EchelonForm(params->field, l), EchelonForm(params->field, l));
            const EchelonForm* prev_i = k > 1 ? &q.layers_.back().i_layer : nullptr;
            const EchelonForm* prev_j = k > 1 ? &q.layers_.back().j_layer : nullptr;
            return make_layer(k, l, ideal_I_layer(params, k, prev_i), ideal_J_layer(params, k, prev_j));
        }();
        layer.offset = q.total_dim_;
        q.total_dim_ += layer.dimension();
        if (layer.dimension() == 0 && !first_zero) first_zero = k;
        if (layer.dimension() > 0 && !first_zero) q.class_ = k;
        const bool nonzero = layer.dimension() > 0;
        q.layers_.push_back(std::move(layer));
        if (!options.zero_ideal && k >= p && nonzero && !first_zero)
            throw InvariantViolation("quotient layer of degree " + std::to_string(k) + " is nonzero: class exceeds p-1");
    }

    q.complete_ = first_zero.has_value();
    const Field& K = params->K();
    for (const auto& layer : q.layers_) {
        for (auto col : layer.reps) {
            const auto b = basis_element(p, layer.degree, col);
            q.f_scale_.push_back(K.pow(params->omega, weight(b, p)));
            const auto img = h_image(b, p, params->r);
            const auto coords = q.reduce_global(layer.degree, {{static_cast<std::uint32_t>(basis_index(img, p).ordinal), K.one()}});
            q.h_images_.push_back(to_sparse(coords, K));
        }
    }
    q.compute_structure_constants();
    return q;
}

const QuotientLayer& QuotientAlgebra::layer(unsigned k) const
{
    if (k < 1 || k > layers_.size()) throw InvalidArgument("degree " + std::to_string(k) + " not computed");
    return layers_[k - 1];
}

std::size_t QuotientAlgebra::dimension(unsigned k) const
{
    if (k < 1 || k > layers_.size()) return 0;
    return layers_[k - 1].dimension();
}

unsigned QuotientAlgebra::rep_degree(std::size_t index) const
{
    for (const auto& layer : layers_)
        if (index < layer.offset + layer.dimension()) return layer.degree;
    throw InvalidArgument("representative index out of range");
}

BasisElement QuotientAlgebra::rep_element(std::size_t index) const
{
    const auto& layer = layers_[rep_degree(index) - 1];
    return basis_element(p(), layer.degree, layer.reps[index - layer.offset]);
}

DenseVector QuotientAlgebra::reduce(unsigned k, const SparseRow& v) const
{
    if (k < 1 || k > layers_.size()) return {};
    const auto& layer = layers_[k - 1];
    DenseVector out(layer.dimension(), field().zero());
    for (const auto& e : layer.t_layer.reduce(v)) out[static_cast<std::size_t>(layer.rep_pos[e.col])] = e.val;
    return out;
}

DenseVector QuotientAlgebra::reduce_global(unsigned k, const SparseRow& v) const
{
    DenseVector out = zero_vector();
    if (k < 1 || k > layers_.size()) return out;
    const auto local = reduce(k, v);
    std::copy(local.begin(), local.end(), out.begin() + static_cast<std::ptrdiff_t>(layers_[k - 1].offset));
    return out;
}

DenseVector QuotientAlgebra::image(const AlgebraElement& x) const
{
    DenseVector out = zero_vector();
    for (unsigned k = 1; k <= layers_.size(); ++k) {
        const auto part = homogeneous_component(x, k);
        if (part.is_zero()) continue;
        const auto v = reduce_global(k, to_row(part, k));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = field().add(out[i], v[i]);
    }
    return out;
}

void QuotientAlgebra::compute_structure_constants()
{
    const Field& K = field();
    by_first_.assign(total_dim_, {});
    constants_.clear();
    const unsigned p = this->p();
    // Only [v-type, a_j] brackets are nonzero. Degree 1 has no relations, so the
    // a_j are exactly the global representatives 0 .. p-2.
    for (std::uint32_t a = 0; a + 1 < p; ++a) {
        const auto ea = rep_element(a);
        for (std::uint32_t b = p - 1; b < total_dim_; ++b) {
            BasisElement m = BasisElement::a(1);
            int sign = 0;
            if (!bracket_monomials(ea, rep_element(b), m, sign)) continue;
            const unsigned d = m.degree();
            if (d > layers_.size()) continue;
            const auto coords = reduce(d, {{static_cast<std::uint32_t>(basis_index(m, p).ordinal), sign > 0 ? K.one() : K.neg(K.one())}});
            const auto offset = static_cast<std::uint32_t>(layers_[d - 1].offset);
            for (std::uint32_t i = 0; i < coords.size(); ++i) {
                if (coords[i] == K.zero()) continue;
                constants_.push_back({a, b, offset + i, coords[i]});
                by_first_[a].push_back({a, b, offset + i, coords[i]});
                by_first_[b].push_back({b, a, offset + i, K.neg(coords[i])});
            }
        }
    }
}

DenseVector QuotientAlgebra::bracket(const DenseVector& x, const DenseVector& y) const
{
    const Field& K = field();
    DenseVector out = zero_vector();
    for (std::size_t a = 0; a < x.size(); ++a) {
        if (x[a] == K.zero()) continue;
        for (const auto& sc : by_first_[a]) {
            if (y[sc.b] == K.zero()) continue;
            out[sc.d] = K.add(out[sc.d], K.mul(K.mul(x[a], y[sc.b]), sc.c));
        }
    }
    return out;
}

DenseVector QuotientAlgebra::apply_f(const DenseVector& x) const
{
    DenseVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = field().mul(x[i], f_scale_[i]);
    return out;
}

DenseVector QuotientAlgebra::apply_h(const DenseVector& x) const
{
    const Field& K = field();
    DenseVector out = zero_vector();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == K.zero()) continue;
        for (const auto& e : h_images_[i]) out[e.col] = K.add(out[e.col], K.mul(x[i], e.val));
    }
    return out;
}

DenseMatrix QuotientAlgebra::h_matrix(unsigned k) const
{
    const auto& layer = this->layer(k);
    const std::size_t n = layer.dimension();
    DenseMatrix m(n, DenseVector(n, field().zero()));
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& e : h_images_[layer.offset + j]) m[e.col - layer.offset][j] = e.val;
    return m;
}

std::vector<std::size_t> quotient_dimensions(const ParamsPtr& params, unsigned stop_degree)
{
    const unsigned p = params->p;
    std::vector<std::size_t> dims;
    std::optional<EchelonForm> prev_i, prev_j;
    for (unsigned k = 1; k <= stop_degree; ++k) {
        EchelonForm i_layer = ideal_I_layer(params, k, prev_i ? &*prev_i : nullptr);
        EchelonForm j_layer = ideal_J_layer(params, k, prev_j ? &*prev_j : nullptr);
        const std::size_t t = sum_of_layers(i_layer, j_layer).rank();
        dims.push_back(layer_size(p, k) - t);
        if (dims.back() == 0) break;
        prev_i.emplace(std::move(i_layer));
        prev_j.emplace(std::move(j_layer));
    }
    return dims;
}

Integer lower_bound(unsigned p, unsigned k)
{
    if (k < 2) throw InvalidParameter("lower_bound requires k >= 2");
    return dimension_formula(p, k) - bound_I(p, k) - bound_J(p, k);
}

double lower_bound_growth(unsigned p, unsigned k)
{
    const boost::multiprecision::cpp_rational ratio(lower_bound(p, k) * factorial(k - 1), integer_pow(p, k));
    return ratio.convert_to<double>();
}

std::optional<SearchResult> search_min_prime(unsigned n, SearchMode mode, unsigned p_max, unsigned threads)
{
    if (n < 1) throw InvalidParameter("target class must be >= 1");
    std::vector<unsigned> primes;
    for (unsigned p = 3; p <= p_max; ++p)
        if (is_prime(p)) primes.push_back(p);

    if (mode == SearchMode::bound) {
        for (auto p : primes) {
            // class >= 1 holds for every p; the bound is only defined from degree 2
            if (n == 1) return SearchResult{p, Integer(static_cast<unsigned>(dimension_formula(p, 1)))};
            Integer lb = lower_bound(p, n);
            if (lb > 0) return SearchResult{p, lb};
        }
        return std::nullopt;
    }

    auto evaluate = [n](unsigned p) -> std::optional<SearchResult> {
        const auto dims = quotient_dimensions(find_parameters(p, FieldMode::lazard), n);
        if (dims.size() >= n && dims[n - 1] > 0) {
            const auto full = QuotientAlgebra::build(find_parameters(p, FieldMode::lazard));
            return SearchResult{p, Integer(full.nilpotency_class())};
        }
        return std::nullopt;
    };
    threads = std::max(1u, threads);
    // Batches in prime order so the reported prime never depends on scheduling.
    for (std::size_t start = 0; start < primes.size(); start += threads) {
        const std::size_t end = std::min(primes.size(), start + threads);
        std::vector<std::future<std::optional<SearchResult>>> jobs;
        for (std::size_t i = start; i < end; ++i)
            jobs.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred, evaluate, primes[i]));
        std::optional<SearchResult> found;
        for (auto& j : jobs) {
            auto r = j.get();
            if (r && !found) found = std::move(r);
        }
        if (found) return found;
    }
    return std::nullopt;
}

namespace {

DenseMatrix minus_identity(DenseMatrix m, const Field& K)
{
    for (std::size_t i = 0; i < m.size(); ++i) m[i][i] = K.sub(m[i][i], K.one());
    return m;
}

DenseVector embed(const QuotientAlgebra& q, unsigned k, const DenseVector& local)
{
    DenseVector out = q.zero_vector();
    std::copy(local.begin(), local.end(), out.begin() + static_cast<std::ptrdiff_t>(q.layer(k).offset));
    return out;
}

bool is_zero(const DenseVector& v, const Field& K)
{
    return std::all_of(v.begin(), v.end(), [&](FieldElement x) { return x == K.zero(); });
}

} // namespace

bool verify_kernel_centralizer_trivial(const QuotientAlgebra& q)
{
    const Field& K = q.field();
    const unsigned p = q.p();
    for (const auto& layer : q.layers()) {
        for (const auto& b : kernel_centralizer_basis(p, layer.degree))
            if (!is_zero(q.reduce(layer.degree, {{static_cast<std::uint32_t>(basis_index(b, p).ordinal), K.one()}}), K))
                return false;
        const std::size_t n = layer.dimension();
        DenseMatrix f(n, DenseVector(n, K.zero()));
        for (std::size_t i = 0; i < n; ++i) {
            DenseVector e = q.zero_vector();
            e[layer.offset + i] = K.one();
            const auto img = q.apply_f(e);
            for (std::size_t r = 0; r < n; ++r) f[r][i] = img[layer.offset + r];
        }
        if (!nullspace(q.params()->field, minus_identity(std::move(f), K), n).empty()) return false;
    }
    return true;
}

DenseMatrix h_fixed_basis(const QuotientAlgebra& q, unsigned k)
{
    const std::size_t n = q.dimension(k);
    DenseMatrix out;
    for (const auto& v : nullspace(q.params()->field, minus_identity(q.h_matrix(k), q.field()), n))
        out.push_back(embed(q, k, v));
    return out;
}

bool verify_complement_centralizer_abelian(const QuotientAlgebra& q)
{
    DenseMatrix fixed;
    for (unsigned k = 1; k <= q.computed_degree(); ++k)
        for (auto& v : h_fixed_basis(q, k)) fixed.push_back(std::move(v));
    for (std::size_t i = 0; i < fixed.size(); ++i)
        for (std::size_t j = i + 1; j < fixed.size(); ++j)
            if (!is_zero(q.bracket(fixed[i], fixed[j]), q.field())) return false;
    return true;
}

std::vector<CoveringRow> covering_table(const QuotientAlgebra& q)
{
    std::vector<CoveringRow> rows;
    const auto& params = q.params();
    for (unsigned k = 1; k <= q.computed_degree(); ++k) {
        const std::size_t n = q.dimension(k);
        const std::size_t fixed = nullspace(params->field, minus_identity(q.h_matrix(k), q.field()), n).size();
        EchelonForm images(params->field, n);
        for (const auto& x : complement_centralizer_basis(params, k)) images.insert(to_sparse(q.reduce(k, to_row(x, k)), q.field()));
        rows.push_back({k, fixed, images.rank()});
    }
    return rows;
}

bool verify_covering(const QuotientAlgebra& q)
{
    const auto rows = covering_table(q);
    return std::all_of(rows.begin(), rows.end(), [](const CoveringRow& r) { return r.holds(); });
}

} // namespace frobalg
