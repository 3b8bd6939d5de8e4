#include "frobalg/errors.hpp"
#include "frobalg/quotient.hpp"
#include "frobalg/suite.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace frobalg;

namespace {

std::vector<std::size_t> dims(const QuotientAlgebra& q)
{
    std::vector<std::size_t> out;
    for (const auto& l : q.layers()) out.push_back(l.dimension());
    return out;
}

bool is_zero(const Field& k, const DenseVector& v)
{
    return std::all_of(v.begin(), v.end(), [&](FieldElement c) { return c == k.zero(); });
}

} // namespace

TEST(Quotient, PThree)
{
    const auto q = QuotientAlgebra::build(find_parameters(3, FieldMode::lazard));
    EXPECT_EQ(dims(q), (std::vector<std::size_t>{4, 0}));
    EXPECT_EQ(q.nilpotency_class(), 1u);
    EXPECT_TRUE(q.complete());
    std::vector<std::string> reps;
    for (std::size_t i = 0; i < q.total_dimension(); ++i) reps.push_back(q.rep_element(i).to_string());
    EXPECT_EQ(reps, (std::vector<std::string>{"a1", "a2", "v1", "v2"}));
    EXPECT_EQ(q.layer(2).i_layer.rank(), 2u);
    EXPECT_EQ(q.layer(2).j_layer.rank(), 3u);
    EXPECT_EQ(q.layer(2).t_layer.rank(), 4u);
    EXPECT_TRUE(q.structure_constants().empty());
}

TEST(Quotient, KnownFamilies)
{
    struct Case {
        unsigned p;
        std::vector<std::size_t> dims;
        unsigned cls;
    };
    for (const auto& c : {Case{5, {8, 8, 0}, 2}, Case{7, {12, 24, 18, 0}, 3}}) {
        const auto q = QuotientAlgebra::build(find_parameters(c.p, FieldMode::lazard));
        EXPECT_EQ(dims(q), c.dims) << c.p;
        EXPECT_EQ(q.nilpotency_class(), c.cls) << c.p;
    }
}

TEST(Quotient, DimensionsMatchDenseOracle)
{
    // quotient dimension = l - rank(I rows + J rows), the rank recomputed densely
    for (unsigned p : {5u, 7u}) {
        const auto params = find_parameters(p, FieldMode::lazard);
        const auto q = QuotientAlgebra::build(params);
        for (const auto& layer : q.layers()) {
            std::vector<std::vector<std::int64_t>> rows;
            for (const EchelonForm* e : {&layer.i_layer, &layer.j_layer})
                for (const auto& r : e->rows()) {
                    std::vector<std::int64_t> d(layer.l, 0);
                    for (const auto& x : r) d[x.col] = x.val.code;
                    rows.push_back(d);
                }
            const auto rank = oracle::rank_mod(rows, params->K().characteristic());
            EXPECT_EQ(layer.dimension(), layer.l - rank);
        }
    }
}

TEST(Quotient, LowerBound)
{
    EXPECT_EQ(lower_bound(5, 2), 7);
    EXPECT_EQ(lower_bound(11, 3), 130);
    EXPECT_EQ(lower_bound(7, 3), -30);
    EXPECT_EQ(lower_bound(3, 2), -1);
    EXPECT_EQ(lower_bound(37, 4), 43182);
    EXPECT_THROW(lower_bound(5, 1), InvalidParameter);
    for (unsigned p : {3u, 5u, 7u, 11u, 13u, 37u, 41u})
        for (unsigned k = 2; k <= 6; ++k) EXPECT_EQ(lower_bound(p, k), oracle::lower_bound(p, k));
}

TEST(Quotient, LowerBoundGrowth)
{
    for (unsigned p : {5u, 11u, 101u})
        for (unsigned k = 2; k <= 4; ++k) {
            oracle::Int fact = 1;
            for (unsigned i = 2; i < k; ++i) fact *= i;
            const oracle::Rat expected(oracle::lower_bound(p, k) * fact, oracle::power(p, k));
            EXPECT_DOUBLE_EQ(lower_bound_growth(p, k), expected.convert_to<double>()) << p << " " << k;
        }
    for (unsigned k = 2; k <= 4; ++k) {
        EXPECT_NEAR(lower_bound_growth(10007, k), 1.0, 0.01) << k;
        EXPECT_LT(std::abs(lower_bound_growth(10007, k) - 1.0), std::abs(lower_bound_growth(101, k) - 1.0)) << k;
    }
    EXPECT_THROW(lower_bound_growth(5, 1), InvalidParameter);
}

TEST(Quotient, LowerBoundRespected)
{
    for (unsigned p : {3u, 5u, 7u}) {
        const auto q = QuotientAlgebra::build(find_parameters(p, FieldMode::lazard));
        for (const auto& l : q.layers()) {
            if (l.degree < 2) continue;
            const Integer lb = lower_bound(p, l.degree);
            if (lb > 0) EXPECT_GE(Integer(l.dimension()), lb);
            EXPECT_LE(q.nilpotency_class(), p - 1);
        }
    }
}

TEST(Quotient, SearchBound)
{
    EXPECT_EQ(search_min_prime(2, SearchMode::bound, 50)->p, 5u);
    EXPECT_EQ(search_min_prime(2, SearchMode::bound, 50)->witness, 7);
    EXPECT_EQ(search_min_prime(3, SearchMode::bound, 50)->p, 11u);
    EXPECT_EQ(search_min_prime(3, SearchMode::bound, 50)->witness, 130);
    EXPECT_EQ(search_min_prime(4, SearchMode::bound, 50)->p, 37u);
    EXPECT_FALSE(search_min_prime(4, SearchMode::bound, 31).has_value());
    EXPECT_THROW(search_min_prime(0, SearchMode::bound, 50), InvalidParameter);
}

TEST(Quotient, SearchExactNotAboveBound)
{
    for (unsigned n : {2u, 3u}) {
        const auto exact = search_min_prime(n, SearchMode::exact, 11, 2);
        const auto bound = search_min_prime(n, SearchMode::bound, 11);
        ASSERT_TRUE(exact && bound);
        EXPECT_LE(exact->p, bound->p);
        EXPECT_GE(exact->witness, n);
    }
    EXPECT_EQ(search_min_prime(3, SearchMode::exact, 11, 1)->p, 7u);
}

TEST(Quotient, Centralizers)
{
    for (auto params : {find_parameters(3, FieldMode::lazard), find_parameters(5, FieldMode::lazard),
                        find_parameters(5, FieldMode::noncoprime), find_parameters(7, FieldMode::lazard)}) {
        const auto q = QuotientAlgebra::build(params);
        EXPECT_TRUE(verify_kernel_centralizer_trivial(q));
        EXPECT_TRUE(verify_complement_centralizer_abelian(q));
        EXPECT_TRUE(verify_covering(q));
    }
    const auto p3 = QuotientAlgebra::build(find_parameters(3, FieldMode::lazard));
    const auto rows = covering_table(p3);
    EXPECT_EQ(rows[0].fixed_dim, 2u);
    EXPECT_EQ(rows[0].image_dim, 2u);
}

TEST(Quotient, ZeroIdealIsNegativeControl)
{
    QuotientOptions o;
    o.zero_ideal = true;
    o.max_degree = 2;
    for (unsigned p : {3u, 5u}) {
        const auto q = QuotientAlgebra::build(find_parameters(p, FieldMode::lazard), o);
        EXPECT_EQ(q.dimension(2), layer_size(p, 2));
        EXPECT_FALSE(verify_kernel_centralizer_trivial(q));
    }
    QuotientOptions bad;
    bad.zero_ideal = true;
    EXPECT_THROW(QuotientAlgebra::build(find_parameters(3, FieldMode::lazard), bad), InvalidArgument);
}

TEST(Quotient, CapAndExtend)
{
    const auto params = find_parameters(7, FieldMode::lazard);
    QuotientOptions cap;
    cap.cap_degree = 2;
    const auto capped = QuotientAlgebra::build(params, cap);
    EXPECT_EQ(capped.computed_degree(), 2u);
    EXPECT_FALSE(capped.complete());
    QuotientOptions extend;
    extend.max_degree = 6;
    const auto extended = QuotientAlgebra::build(params, extend);
    EXPECT_EQ(extended.computed_degree(), 6u);
    EXPECT_EQ(extended.dimension(5), 0u);
    EXPECT_EQ(extended.dimension(6), 0u);
    EXPECT_EQ(extended.nilpotency_class(), 3u);
}

TEST(Quotient, BracketAndInducedMaps)
{
    const auto params = find_parameters(5, FieldMode::lazard);
    const auto q = QuotientAlgebra::build(params);
    const Field& k = q.field();
    std::mt19937_64 rng(21);
    for (int t = 0; t < 300; ++t) {
        const auto x = random_element(params, 2, 3, rng), y = random_element(params, 2, 3, rng);
        // the image map is a homomorphism
        EXPECT_EQ(q.image(bracket(x, y)), q.bracket(q.image(x), q.image(y)));
        EXPECT_EQ(q.image(apply_f(x)), q.apply_f(q.image(x)));
        EXPECT_EQ(q.image(apply_h(x)), q.apply_h(q.image(x)));
    }
    // weight-0 part of every layer is zero
    for (unsigned d = 1; d <= q.computed_degree(); ++d)
        for (const auto& b : kernel_centralizer_basis(5, d))
            EXPECT_TRUE(is_zero(k, q.image(AlgebraElement(params, b))));
    // h-matrix columns follow the images of representatives
    const auto h = q.h_matrix(1);
    EXPECT_EQ(h.size(), 8u);
}

TEST(Quotient, ElevenOverGF23)
{
    const auto q = QuotientAlgebra::build(find_parameters(11, FieldMode::lazard));
    EXPECT_EQ(dims(q), (std::vector<std::size_t>{20, 80, 230, 0}));
    EXPECT_EQ(q.nilpotency_class(), 3u);
}
