#include <gtest/gtest.h>

#include <random>

#include "johnsonlab/groupring.hpp"
#include "oracles.hpp"

using namespace johnsonlab;

namespace {

IntegralGroupRing elem(const Word &w) { return IntegralGroupRing::from_word(w); }
IntegralGroupRing one() { return IntegralGroupRing::constant(Integer(1)); }

IntegralGroupRing higher(const IntegralGroupRing &e, std::vector<int> idx, Rank rank)
{
    if (idx.empty()) return e;
    return higher_fox_derivative(e, MultiIndex(std::move(idx)), rank);
}

} // namespace

TEST(GroupRing, FoxDerivativeOfGenerators)
{
    const Rank rank(1);
    EXPECT_EQ(fox_derivative(parse_word("x1"), 1, rank), one());
    EXPECT_TRUE(fox_derivative(parse_word("x1"), 2, rank).is_zero());
    EXPECT_EQ(fox_derivative(parse_word("X1"), 1, rank), -elem(parse_word("X1")));
    // d(x1^3)/dx1 = 1 + x1 + x1^2
    EXPECT_EQ(fox_derivative(parse_word("x1 x1 x1"), 1, rank), one() + elem(parse_word("x1")) + elem(parse_word("x1 x1")));
    // d[x1,x2]/dx1 = 1 - x1 x2 x1^-1
    EXPECT_EQ(fox_derivative(parse_word("x1 x2 X1 X2"), 1, rank), one() - elem(parse_word("x1 x2 X1")));
}

TEST(GroupRing, FundamentalFormula)
{
    std::mt19937_64 rng(10);
    const Rank rank(2);
    for (int t = 0; t < 200; ++t) {
        const Word u = oracle::random_word(rng, rank.n(), 10);
        IntegralGroupRing rhs;
        for (int j = 1; j <= rank.n(); ++j) rhs += fox_derivative(u, j, rank) * (elem(Word::generator(j)) - one());
        EXPECT_EQ(rhs, elem(u) - one()) << to_string(u);
    }
}

TEST(GroupRing, AugmentationOfDerivativeIsExponentSum)
{
    std::mt19937_64 rng(11);
    const Rank rank(2);
    for (int t = 0; t < 200; ++t) {
        const Word u = oracle::random_word(rng, rank.n(), 12);
        const auto ev = exponent_vector(u, rank);
        for (int j = 1; j <= rank.n(); ++j) EXPECT_EQ(augmentation(fox_derivative(u, j, rank)), Integer(ev[j - 1]));
        EXPECT_EQ(augmentation(elem(u)), Integer(1));
    }
}

TEST(GroupRing, ProductRule)
{
    std::mt19937_64 rng(12);
    const Rank rank(2);
    for (int t = 0; t < 200; ++t) {
        const Word u = oracle::random_word(rng, rank.n(), 8), v = oracle::random_word(rng, rank.n(), 8);
        for (int j = 1; j <= rank.n(); ++j)
            EXPECT_EQ(fox_derivative(u * v, j, rank), fox_derivative(u, j, rank) + elem(u) * fox_derivative(v, j, rank));
    }
}

// d_{j_l}...d_{j_1}(uv) = sum_{n=1..l} [d_{j_l}...d_{j_n} u] * eps(d_{j_{n-1}}...d_{j_1} v) + u * d_{j_l}...d_{j_1} v
TEST(GroupRing, HigherProductRule)
{
    std::mt19937_64 rng(13);
    const Rank rank(2);
    for (int t = 0; t < 100; ++t) {
        const Word u = oracle::random_word(rng, rank.n(), 7), v = oracle::random_word(rng, rank.n(), 7);
        for (int l = 1; l <= 3; ++l) {
            std::vector<int> j(l);
            for (int &x : j) x = 1 + static_cast<int>(rng() % rank.n());
            IntegralGroupRing rhs = elem(u) * higher(elem(v), j, rank);
            for (int n = 1; n <= l; ++n) {
                const std::vector<int> on_u(j.begin() + (n - 1), j.end());
                const std::vector<int> on_v(j.begin(), j.begin() + (n - 1));
                rhs += higher(elem(u), on_u, rank).scaled(augmentation(higher(elem(v), on_v, rank)));
            }
            EXPECT_EQ(higher(elem(u * v), j, rank), rhs) << to_string(u) << " | " << to_string(v);
        }
    }
}

TEST(GroupRing, BarIsAntiInvolution)
{
    std::mt19937_64 rng(14);
    for (int t = 0; t < 100; ++t) {
        const IntegralGroupRing a = elem(oracle::random_word(rng, 4, 6)) + elem(oracle::random_word(rng, 4, 6)).scaled(Integer(3));
        const IntegralGroupRing b = elem(oracle::random_word(rng, 4, 6)) - elem(oracle::random_word(rng, 4, 6));
        EXPECT_EQ(bar(a * b), bar(b) * bar(a));
        EXPECT_EQ(bar(bar(a)), a);
        EXPECT_EQ(augmentation(bar(a)), augmentation(a));
    }
}

TEST(GroupRing, EvalModIsReducedAugmentation)
{
    std::mt19937_64 rng(15);
    const Rank rank(2);
    for (int t = 0; t < 100; ++t) {
        const Word u = oracle::random_word(rng, rank.n(), 12);
        const auto e = higher(elem(u), {1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 4)}, rank);
        for (std::uint32_t p : {3u, 5u}) EXPECT_EQ(static_cast<long long>(eval_mod(e, p)), oracle::mod(augmentation(e), p));
    }
}

TEST(GroupRing, PrimeFieldDerivativeMatchesReduction)
{
    std::mt19937_64 rng(16);
    const Rank rank(2);
    const PrimeField f3(3);
    for (int t = 0; t < 100; ++t) {
        const Word u = oracle::random_word(rng, rank.n(), 12);
        for (int j = 1; j <= rank.n(); ++j)
            EXPECT_EQ(fox_derivative(u, j, rank, f3), change_ring(fox_derivative(u, j, rank), f3));
    }
}

TEST(GroupRing, Errors)
{
    EXPECT_THROW(MultiIndex(std::vector<int>{}), InvalidArgument);
    EXPECT_THROW(fox_derivative(parse_word("x1"), 3, Rank(1)), InvalidGenerator);
    EXPECT_THROW(fox_derivative(parse_word("x3"), 1, Rank(1)), InvalidGenerator);
    const auto a = GroupRingElement<PrimeField>::from_word(parse_word("x1"), PrimeField(3));
    const auto b = GroupRingElement<PrimeField>::from_word(parse_word("x1"), PrimeField(5));
    EXPECT_THROW(a + b, Incompatible);
}
