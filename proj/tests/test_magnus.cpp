#include <gtest/gtest.h>

#include <random>

#include "johnsonlab/magnus.hpp"
#include "oracles.hpp"

using namespace johnsonlab;

namespace {

std::vector<Monomial> monomials_up_to(int n, int D)
{
    std::vector<Monomial> out;
    for (int d = 0; d <= D; ++d)
        for (std::size_t i = 0; i < ipow(n, d); ++i)
            out.push_back(Monomial::from_index(i, d, n));
    return out;
}

} // namespace

TEST(Magnus, MonomialIndexRoundTrip)
{
    for (int d = 0; d <= 4; ++d)
        for (std::size_t i = 0; i < ipow(3, d); ++i) EXPECT_EQ(Monomial::from_index(i, d, 3).index(3), i);
    EXPECT_EQ(Monomial({1, 2}).index(4), 1u);
    EXPECT_EQ(Monomial({2, 1}).index(4), 4u);
}

TEST(Magnus, CoefficientsMatchCountingOracle)
{
    std::mt19937_64 rng(20);
    const int n = 4, D = 4;
    const auto monos = monomials_up_to(n, D);
    ASSERT_EQ(monos.size(), monomial_count(n, D));
    for (int t = 0; t < 100; ++t) {
        const Word u = oracle::random_word(rng, n, 10);
        const auto s = magnus_embed(u, D, n, IntegerRing{});
        const auto s5 = magnus_embed(u, D, n, PrimeField(5));
        for (const auto &m : monos) {
            const auto expect = oracle::magnus_coefficient(u, m.vars);
            EXPECT_EQ(s.coefficient(m), expect) << to_string(u) << " " << to_string(m);
            EXPECT_EQ(static_cast<long long>(s5.coefficient(m)), oracle::mod(expect, 5));
        }
    }
}

TEST(Magnus, KnownExpansions)
{
    // Mag(x1^-1) = 1 - w1 + w1^2 - ...
    const auto s = magnus_embed(parse_word("X1"), 3, 2, IntegerRing{});
    EXPECT_EQ(s.coefficient(Monomial({1})), -1);
    EXPECT_EQ(s.coefficient(Monomial({1, 1})), 1);
    EXPECT_EQ(s.coefficient(Monomial({1, 1, 1})), -1);
    // Mag([x1,x2]) = 1 + w1 w2 - w2 w1 + ...
    const auto c = magnus_embed(parse_word("x1 x2 X1 X2"), 2, 2, IntegerRing{});
    EXPECT_EQ(c.coefficient(Monomial({1, 2})), 1);
    EXPECT_EQ(c.coefficient(Monomial({2, 1})), -1);
    EXPECT_EQ(c.coefficient(Monomial({1})), 0);
}

TEST(Magnus, EmbeddingIsMultiplicative)
{
    std::mt19937_64 rng(21);
    for (int t = 0; t < 100; ++t) {
        const Word u = oracle::random_word(rng, 4, 8), v = oracle::random_word(rng, 4, 8);
        EXPECT_EQ(series_mul(magnus_embed(u, 4, 4), magnus_embed(v, 4, 4)).terms(), magnus_embed(u * v, 4, 4).terms());
        EXPECT_EQ(series_inverse(magnus_embed(u, 4, 4)).terms(), magnus_embed(invert(u), 4, 4).terms());
    }
}

TEST(Magnus, GroupRingEmbeddingIsLinear)
{
    const auto e = IntegralGroupRing::from_word(parse_word("x1 x2")) - IntegralGroupRing::from_word(parse_word("x2 x1"));
    const auto s = magnus_embed(e, 2, 2);
    EXPECT_EQ(s.coefficient(Monomial()), 0);
    EXPECT_EQ(s.coefficient(Monomial({1, 2})), 1);
    EXPECT_EQ(s.coefficient(Monomial({2, 1})), -1);
}

TEST(Magnus, ReduceModMatchesPrimeFieldEmbedding)
{
    std::mt19937_64 rng(22);
    for (int t = 0; t < 50; ++t) {
        const Word u = oracle::random_word(rng, 4, 12);
        EXPECT_EQ(reduce_mod(magnus_embed(u, 3, 4), PrimeField(3)).terms(), magnus_embed(u, 3, 4, PrimeField(3)).terms());
    }
}

TEST(Magnus, Valuation)
{
    const Word c12 = parse_word("x1 x2 X1 X2");
    const Word nested = commutator(Word::generator(1), c12);
    EXPECT_EQ(valuation(c12, 4, 2).degree, 2);
    EXPECT_EQ(valuation(nested, 4, 2).degree, 3);
    EXPECT_EQ(valuation(nested, 4, 2).witness.degree(), 3);
    EXPECT_FALSE(valuation(Word{}, 4, 2).degree.has_value());
    EXPECT_EQ(valuation(power(Word::generator(1), 3), 4, 2, PrimeField(3)).degree, 3);
    EXPECT_EQ(valuation(power(Word::generator(1), 3), 4, 2).degree, 1);
}

TEST(Magnus, Errors)
{
    const auto s = magnus_embed(parse_word("x1"), 2, 2);
    EXPECT_THROW(s.coefficient(Monomial({1, 1, 1})), OutOfRange);
    EXPECT_THROW(series_mul(s, magnus_embed(parse_word("x1"), 3, 2)), Incompatible);
    EXPECT_THROW(series_mul(s, magnus_embed(parse_word("x1"), 2, 3)), Incompatible);
    EXPECT_THROW(series_inverse(TruncatedSeries<IntegerRing>(IntegerRing{}, 2, 2)), NotAUnit);
    EXPECT_THROW(magnus_embed(parse_word("x1"), 3, 4, IntegerRing{}, Budget{10}), BudgetExceeded);
    EXPECT_THROW(magnus_embed(parse_word("x3"), 2, 2), InvalidGenerator);
    EXPECT_NO_THROW(magnus_embed(parse_word("x1"), 3, 4, IntegerRing{}, Budget{monomial_count(4, 3)}));
}
