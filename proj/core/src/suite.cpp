#include "frobalg/suite.hpp"

#include "frobalg/arith.hpp"
#include "frobalg/errors.hpp"
#include "frobalg/lazard.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

namespace frobalg {

AlgebraElement random_element(const ParamsPtr& params, unsigned max_degree, unsigned terms, std::mt19937_64& rng)
{
    const unsigned p = params->p;
    const auto size = params->K().cardinality();
    AlgebraElement x(params);
    for (unsigned k = 1; k <= max_degree; ++k) {
        const std::size_t l = layer_size(p, k);
        for (unsigned t = 0; t < terms; ++t) {
            const auto b = basis_element(p, k, rng() % l);
            x.add_term(b, FieldElement{static_cast<std::uint32_t>(rng() % size)});
        }
    }
    return x;
}

DenseVector random_vector(const QuotientAlgebra& q, std::mt19937_64& rng)
{
    DenseVector v(q.total_dimension());
    for (auto& c : v) c = FieldElement{static_cast<std::uint32_t>(rng() % q.field().cardinality())};
    return v;
}

namespace {

class Recorder {
public:
    explicit Recorder(CheckResults& out) : out_(out) {}

    void add(std::string name, bool passed, std::string detail) { out_.push_back({std::move(name), passed, std::move(detail)}); }

    // Runs `trials` instances of a predicate and reports the failure count.
    template <class F>
    void trials(std::string name, unsigned n, const std::string& what, F&& predicate)
    {
        unsigned failures = 0;
        for (unsigned t = 0; t < n; ++t)
            if (!predicate()) ++failures;
        add(std::move(name), failures == 0, std::to_string(n) + " " + what + ", " + std::to_string(failures) + " failures");
    }

private:
    CheckResults& out_;
};

std::string join_dims(const std::vector<std::size_t>& dims)
{
    std::string s = "[";
    for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
    return s + "]";
}

bool layer_contains(const EchelonForm& layer, const AlgebraElement& x, unsigned k)
{
    const auto part = homogeneous_component(x, k);
    return part.is_zero() || layer.contains(to_row(part, k));
}

DenseVector vec_sub(const Field& K, DenseVector a, const DenseVector& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = K.sub(a[i], b[i]);
    return a;
}

bool vec_is_zero(const Field& K, const DenseVector& v)
{
    return std::all_of(v.begin(), v.end(), [&](FieldElement c) { return c == K.zero(); });
}

void algebra_checks(const ParamsPtr& params, const SuiteOptions& o, std::mt19937_64& rng, Recorder& rec)
{
    const unsigned p = params->p;
    const unsigned deg = std::min(3u, p - 1);
    auto rnd = [&] { return random_element(params, deg, 3, rng); };

    rec.trials("algebra.antisymmetry", o.trials, "random pairs", [&] {
        const auto x = rnd(), y = rnd();
        return bracket(x, y) == -bracket(y, x) && bracket(x, x).is_zero();
    });
    rec.trials("algebra.jacobi", o.trials, "random triples", [&] {
        const auto x = rnd(), y = rnd(), z = rnd();
        return (bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y)).is_zero();
    });
    rec.trials("algebra.metabelian", o.trials, "random quadruples", [&] {
        const auto x = rnd(), y = rnd(), z = rnd(), w = rnd();
        return bracket(bracket(x, y), bracket(z, w)).is_zero();
    });
    rec.trials("action.f_automorphism", o.trials, "random pairs", [&] {
        const auto x = rnd(), y = rnd();
        return apply_f(bracket(x, y)) == bracket(apply_f(x), apply_f(y));
    });
    rec.trials("action.h_automorphism", o.trials, "random pairs", [&] {
        const auto x = rnd(), y = rnd();
        return apply_h(bracket(x, y)) == bracket(apply_h(x), apply_h(y));
    });

    const bool generators = verify_frobenius_relation(*params);
    unsigned failures = 0;
    for (unsigned t = 0; t < o.trials; ++t) {
        const auto x = rnd();
        if (!(apply_h_power(apply_f(apply_h(x)), p - 2) == apply_f_power(x, params->r))) ++failures;
    }
    rec.add("action.frobenius_relation", generators && failures == 0,
            std::string("generators ") + (generators ? "pass" : "fail") + ", " + std::to_string(o.trials) +
                " random elements, " + std::to_string(failures) + " failures");

    rec.trials("action.weight_permutation", o.trials, "random elements", [&] {
        const auto x = rnd();
        const auto parts = weight_decomposition(x);
        const auto image = weight_decomposition(apply_h(x));
        for (const auto& [w, part] : parts) {
            auto it = image.find(static_cast<unsigned>(w * params->r % p));
            if (it == image.end() || !(it->second == apply_h(part))) return false;
        }
        return parts.size() == image.size();
    });
}

void orbit_checks(const ParamsPtr& params, unsigned max_degree, Recorder& rec)
{
    const unsigned p = params->p;
    const unsigned r = params->r;
    const Field& K = params->K();
    bool lengths = true, count = true, fixed = true, wprime = true, fixed_space = true;
    std::string detail;
    for (unsigned k = 1; k <= max_degree; ++k) {
        const auto basis = enumerate_basis(p, k);
        for (const auto& b : basis) {
            auto orbit = h_orbit(b, p, r);
            std::set<BasisElement> distinct(orbit.begin(), orbit.end());
            if (orbit.size() != p - 1 || distinct.size() != p - 1) lengths = false;
        }
        const auto sums = complement_centralizer_basis(params, k);
        if (sums.size() * (p - 1) != basis.size()) count = false;
        for (const auto& s : sums)
            if (!(apply_h(s) == s)) fixed = false;

        std::size_t nonzero_weight = 0;
        for (const auto& b : basis)
            if (weight(b, p) != 0) ++nonzero_weight;
        if (nonzero_weight != (p - 1) * nonzero_weight_orbit_count(p, r, k)) wprime = false;

        // fixed space of the permutation = kernel of (P - I); rank via rows e_{pi(j)} - e_j
        std::vector<SparseRow> rows;
        for (std::uint32_t j = 0; j < basis.size(); ++j) {
            const auto img = static_cast<std::uint32_t>(basis_index(h_image(basis[j], p, r), p).ordinal);
            if (img == j) continue;
            SparseRow row{{j, K.neg(K.one())}, {img, K.one()}};
            if (img < j) std::swap(row[0], row[1]);
            rows.push_back(std::move(row));
        }
        if (basis.size() - rank_of(params->field, rows, basis.size()) != sums.size()) fixed_space = false;
        detail += (k > 1 ? ", " : "") + std::to_string(k) + ":" + std::to_string(sums.size());
    }
    const std::string range = "degrees 1.." + std::to_string(max_degree);
    rec.add("action.orbit_lengths", lengths, "every h-orbit has length " + std::to_string(p - 1) + " in " + range);
    rec.add("action.complement_dimension", count && fixed && fixed_space,
            "orbit sums per degree {" + detail + "}, all fixed by h, fixed space dimension equals orbit count");
    rec.add("action.nonzero_weight_dimension", wprime, "dim W' = (p-1) * nonzero-weight orbit count in " + range);
}

void ideal_checks(const QuotientAlgebra& q, Recorder& rec)
{
    const auto& params = q.params();
    const unsigned p = q.p();
    const unsigned top = q.computed_degree();

    bool dual = true, bounds = true, recursion = true, invariant = true, ideal = true, gen_perm = true;
    std::string bound_detail;
    for (unsigned k = 1; k <= top; ++k) {
        const auto& layer = q.layer(k);
        std::vector<AlgebraElement> comb;
        for (const auto& b : ideal_I_combinatorial(p, k)) comb.emplace_back(params, b);
        if (!echelonize(comb, params, k).same_subspace(layer.i_layer)) dual = false;

        const auto i = layer.i_layer.rank(), j = layer.j_layer.rank();
        if (Integer(i) > bound_I(p, k) || Integer(j) > bound_J(p, k)) bounds = false;
        bound_detail += (k > 1 ? ", " : "") + std::to_string(k) + ":" + std::to_string(i) + "/" + std::to_string(j);
        if (k >= 2) {
            const Integer prev = k > 2 ? Integer(q.layer(k - 1).j_layer.rank()) : Integer(0);
            if (Integer(j) > Integer(p - 1) * prev + Integer(p) * binomial(k + p - 4, k - 2)) recursion = false;
        }

        for (const EchelonForm* sub : {&layer.i_layer, &layer.j_layer}) {
            const EchelonForm* next = nullptr;
            if (k < top) next = sub == &layer.i_layer ? &q.layer(k + 1).i_layer : &q.layer(k + 1).j_layer;
            for (const auto& row : sub->rows()) {
                const auto x = from_row(params, k, row);
                if (!layer_contains(*sub, apply_f(x), k) || !layer_contains(*sub, apply_h(x), k)) invariant = false;
                if (!next) continue;
                for (const auto& g : enumerate_basis(p, 1))
                    if (!layer_contains(*next, bracket(x, AlgebraElement(params, g)), k + 1)) ideal = false;
            }
        }

        if (k >= 2) {
            for (const auto& g : derived_complement_generators(params, k)) {
                const auto parts = weight_decomposition(g);
                for (const auto& [w, part] : parts) {
                    auto it = parts.find(static_cast<unsigned>(w * params->r % p));
                    if (it == parts.end() || !(it->second == apply_h(part))) gen_perm = false;
                }
            }
        }
    }
    rec.add("ideals.i_dual_oracle", dual, "subset-sum basis spans the recursive I layer in degrees 1.." + std::to_string(top));
    rec.add("ideals.bounds", bounds, "i/j per degree {" + bound_detail + "} within closed-form bounds");
    if (top >= 2) {
        const auto i2 = q.layer(2).i_layer.rank();
        rec.add("ideals.i2_sharp", Integer(i2) == bound_I(p, 2) && i2 == p - 1,
                "i_2 = " + std::to_string(i2) + ", bound " + bound_I(p, 2).str());
    }
    rec.add("ideals.j_recursion", recursion, "j_k <= (p-1) j_{k-1} + p C(k+p-4, k-2) for computed degrees");
    rec.add("ideals.invariance", invariant, "f and h map every I and J layer into itself");
    rec.add("ideals.ideal_property", ideal, "[layer k, L_1] lies in layer k+1 for I and J");
    rec.add("ideals.generator_weights", gen_perm, "h maps the weight-j part of each J generator to its weight-rj part");
}

void quotient_checks(const QuotientAlgebra& q, const SuiteOptions& o, std::mt19937_64& rng, Recorder& rec)
{
    const unsigned p = q.p();
    const Field& K = q.field();
    bool lower = true;
    std::vector<std::size_t> dims;
    for (const auto& layer : q.layers()) {
        dims.push_back(layer.dimension());
        const auto i = layer.i_layer.rank(), j = layer.j_layer.rank();
        if (layer.dimension() != layer.l - layer.t_layer.rank()) lower = false;
        if (layer.l > i + j && layer.dimension() < layer.l - i - j) lower = false;
        if (layer.degree >= 2) {
            const Integer lb = lower_bound(p, layer.degree);
            if (lb > 0 && Integer(layer.dimension()) < lb) lower = false;
        }
    }
    rec.add("quotient.lower_bound", lower, "dims " + join_dims(dims) + " respect l - i - j and the closed-form bound");
    rec.add("quotient.class_cap", q.nilpotency_class() <= p - 1,
            "class " + std::to_string(q.nilpotency_class()) + " <= " + std::to_string(p - 1));
    bool cutoff = true;
    for (const auto& layer : q.layers())
        if (layer.degree > q.nilpotency_class() && layer.dimension() != 0) cutoff = false;
    rec.add("quotient.cutoff", cutoff, "every layer above the class is zero");
    rec.add("quotient.kernel_centralizer_trivial", verify_kernel_centralizer_trivial(q), "no nonzero f-fixed vector in any layer");
    rec.add("quotient.complement_centralizer_abelian", verify_complement_centralizer_abelian(q),
            "h-fixed vectors pairwise commute");
    std::string cover;
    for (const auto& row : covering_table(q))
        cover += (row.degree > 1 ? ", " : "") + std::to_string(row.degree) + ":" + std::to_string(row.fixed_dim) + "=" +
                 std::to_string(row.image_dim);
    rec.add("quotient.covering", verify_covering(q), "fixed dim = image dim per degree {" + cover + "} over " + K.describe());

    rec.trials("quotient.lie_identities", o.trials, "random triples", [&] {
        const auto x = random_vector(q, rng), y = random_vector(q, rng), z = random_vector(q, rng);
        if (!vec_is_zero(K, q.bracket(x, x))) return false;
        auto j = q.bracket(q.bracket(x, y), z);
        const auto b = q.bracket(q.bracket(y, z), x), c = q.bracket(q.bracket(z, x), y);
        for (std::size_t i = 0; i < j.size(); ++i) j[i] = K.add(j[i], K.add(b[i], c[i]));
        return vec_is_zero(K, j);
    });
    rec.trials("quotient.induced_automorphisms", o.trials, "random pairs", [&] {
        const auto x = random_vector(q, rng), y = random_vector(q, rng);
        const auto xy = q.bracket(x, y);
        return vec_is_zero(K, vec_sub(K, q.apply_f(xy), q.bracket(q.apply_f(x), q.apply_f(y)))) &&
               vec_is_zero(K, vec_sub(K, q.apply_h(xy), q.bracket(q.apply_h(x), q.apply_h(y))));
    });

    auto order_of = [&](auto apply, unsigned limit) {
        for (unsigned n = 1; n <= limit; ++n) {
            bool identity = true;
            for (std::size_t i = 0; i < q.total_dimension() && identity; ++i) {
                DenseVector e = q.zero_vector();
                e[i] = K.one();
                DenseVector x = e;
                for (unsigned t = 0; t < n; ++t) x = apply(x);
                identity = x == e;
            }
            if (identity) return n;
        }
        return 0u;
    };
    const unsigned f_order = order_of([&](const DenseVector& v) { return q.apply_f(v); }, p);
    const unsigned h_order = order_of([&](const DenseVector& v) { return q.apply_h(v); }, p - 1);
    rec.add("quotient.automorphism_orders", f_order == p && h_order == p - 1,
            "induced f order " + std::to_string(f_order) + ", induced h order " + std::to_string(h_order));
}

} // namespace

SuiteReport run_invariant_suite(const ParamsPtr& params, const SuiteOptions& options)
{
    SuiteReport report;
    Recorder rec(report.checks);
    const std::string invalid = validate_params(*params);
    rec.add("field.params", invalid.empty(),
            invalid.empty() ? params->K().describe() + ", omega = " + params->K().to_string(params->omega) +
                                  ", r = " + std::to_string(params->r)
                            : invalid);
    if (!invalid.empty()) return report;

    std::mt19937_64 rng(options.seed);
    algebra_checks(params, options, rng, rec);

    std::shared_ptr<const QuotientAlgebra> q;
    try {
        q = std::make_shared<const QuotientAlgebra>(QuotientAlgebra::build(params));
    } catch (const InvariantViolation& e) {
        rec.add("quotient.class_cap", false, e.what());
        return report;
    }
    report.quotient = q;
    orbit_checks(params, q->computed_degree(), rec);
    ideal_checks(*q, rec);
    quotient_checks(*q, options, rng, rec);

    const Field& K = params->K();
    if (K.degree() == 1) {
        std::uint64_t other = K.characteristic();
        do other = next_prime(other);
        while (other % params->p != 1);
        const auto alt = params_for_field(params->p, make_prime_field(other));
        const auto here = quotient_dimensions(params, q->computed_degree());
        const auto there = quotient_dimensions(alt, q->computed_degree());
        report.notices.push_back("cross-field audit: dims " + join_dims(here) + " over " + K.describe() + ", " +
                                 join_dims(there) + " over " + alt->K().describe() +
                                 (here == there ? " (agree)" : " (WARNING: differ)"));
    }

    {
        constexpr unsigned large = 10007;
        std::ostringstream growth;
        growth << std::fixed << std::setprecision(4) << "lower bound growth lower_bound(p,k)*(k-1)!/p^k:";
        for (unsigned k = 2; k <= std::max(2u, std::min(params->p - 1, 4u)); ++k)
            growth << " k=" << k << " " << lower_bound_growth(params->p, k) << " at p=" << params->p << ", "
                   << lower_bound_growth(large, k) << " at p=" << large << ";";
        growth << " leading term in p is p^k/(k-1)!, not p^k/(p-1)!";
        report.notices.push_back(growth.str());
    }

    if (!options.group_checks) {
        report.notices.push_back("group checks disabled");
    } else if (K.characteristic() <= params->p) {
        report.notices.push_back("group checks skipped: characteristic " + std::to_string(K.characteristic()) +
                                 " is not greater than p = " + std::to_string(params->p));
    } else {
        for (auto& c : LazardGroup(q).verify(options.trials, options.seed)) report.checks.push_back(std::move(c));
    }
    return report;
}

} // namespace frobalg
