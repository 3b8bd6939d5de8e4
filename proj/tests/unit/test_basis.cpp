#include "frobalg/basis.hpp"
#include "frobalg/errors.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace frobalg;

namespace {

std::vector<std::string> names(const std::vector<BasisElement>& v)
{
    std::vector<std::string> out;
    for (const auto& b : v) out.push_back(b.to_string());
    return out;
}

} // namespace

TEST(Enumerate, SmallCases)
{
    EXPECT_EQ(names(enumerate_basis(3, 1)), (std::vector<std::string>{"a1", "a2", "v1", "v2"}));
    EXPECT_EQ(names(enumerate_basis(3, 2)), (std::vector<std::string>{"[v1,a1]", "[v1,a2]", "[v2,a1]", "[v2,a2]"}));
    EXPECT_EQ(enumerate_basis(5, 3).size(), 40u);
    EXPECT_THROW(enumerate_basis(2, 1), InvalidParameter);
}

TEST(Enumerate, AgreesWithBruteForce)
{
    for (unsigned p : {3u, 5u, 7u})
        for (unsigned k = 2; k <= 5; ++k) {
            const auto brute = oracle::brute_basis(p, k);
            const auto basis = enumerate_basis(p, k);
            ASSERT_EQ(basis.size(), brute.size());
            std::size_t i = 0;
            for (const auto& [head, tail] : brute) {
                EXPECT_EQ(basis[i].head(), head);
                EXPECT_EQ(std::vector<unsigned>(basis[i].tail().begin(), basis[i].tail().end()), tail);
                ++i;
            }
        }
}

TEST(DimensionFormula, Examples)
{
    EXPECT_EQ(dimension_formula(3, 1), 4);
    EXPECT_EQ(dimension_formula(5, 2), 16);
    EXPECT_EQ(dimension_formula(7, 6), 1512);
    for (unsigned p : {3u, 5u, 7u, 11u, 13u})
        for (unsigned k = 1; k <= 10; ++k) EXPECT_EQ(dimension_formula(p, k), oracle::layer_dimension(p, k));
}

TEST(Enumerate, StrictlyIncreasingAndRoundTrips)
{
    for (unsigned p : {3u, 5u, 7u})
        for (unsigned k = 1; k <= 5; ++k) {
            const auto basis = enumerate_basis(p, k);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                if (i) EXPECT_LT(basis[i - 1], basis[i]);
                EXPECT_EQ(basis_index(basis[i], p), (BasisIndex{k, i}));
                EXPECT_EQ(basis_element(p, k, i), basis[i]);
            }
        }
}

TEST(BasisIndex, Examples)
{
    EXPECT_EQ(basis_index(BasisElement::v(1, {2}), 3), (BasisIndex{2, 1}));
    EXPECT_EQ(basis_index(BasisElement::a(1), 3), (BasisIndex{1, 0}));
    EXPECT_EQ(basis_index(BasisElement::v(2, {1}), 3), (BasisIndex{2, 2}));
}

TEST(Weight, Examples)
{
    EXPECT_EQ(weight(BasisElement::v(1, {2}), 3), 0u);
    EXPECT_EQ(weight(BasisElement::a(2), 5), 2u);
    EXPECT_EQ(weight(BasisElement::v(2, {2}), 3), 1u);
    for (const auto& b : enumerate_basis(7, 1)) EXPECT_NE(weight(b, 7), 0u);
}

TEST(Weight, CountsPartitionTheLayer)
{
    for (unsigned p : {3u, 5u, 7u})
        for (unsigned k = 1; k <= 5; ++k) {
            std::vector<std::size_t> counts(p, 0);
            for (const auto& b : enumerate_basis(p, k)) ++counts[weight(b, p)];
            std::size_t total = 0;
            for (auto c : counts) total += c;
            EXPECT_EQ(total, layer_size(p, k));
        }
}

TEST(BasisElement, TailIsSorted)
{
    const auto b = BasisElement::v(1, {3, 1, 2});
    EXPECT_EQ(b.to_string(), "[v1,a1,a2,a3]");
    EXPECT_EQ(b.degree(), 4u);
    EXPECT_EQ(BasisElement::v(1, {1}).with_a(1).with_a(2), BasisElement::v(1, {2}).with_a(1).with_a(1));
    EXPECT_EQ(BasisElement::v(2).to_string(), "v2");
    EXPECT_EQ(BasisElement::v(2).degree(), 1u);
}
