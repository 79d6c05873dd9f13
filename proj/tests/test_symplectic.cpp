#include <gtest/gtest.h>

#include <random>

#include "johnsonlab/lift.hpp"
#include "johnsonlab/symplectic.hpp"

using namespace johnsonlab;

TEST(Symplectic, OmegaAndGenerators)
{
    for (int g = 1; g <= 3; ++g) {
        EXPECT_TRUE(is_symplectic(omega(g)));
        EXPECT_TRUE(is_symplectic(IntMatrix::identity(2 * g)));
        for (std::uint32_t p : {3u, 5u})
            for (int i = 1; i <= g; ++i)
                for (int j = 1; j <= g; ++j) {
                    const IntMatrix m = gen_M(i, j, p, g), n = gen_N(i, j, p, g);
                    EXPECT_TRUE(is_symplectic(m));
                    EXPECT_TRUE(is_symplectic(n));
                    EXPECT_EQ(congruence_level(m, p), 1);
                    EXPECT_EQ(m * symplectic_inverse(m), IntMatrix::identity(2 * g));
                }
    }
    IntMatrix bad = IntMatrix::identity(2);
    bad(0, 0) = 2;
    EXPECT_FALSE(is_symplectic(bad));
    EXPECT_THROW(gen_M(1, 3, 3, 2), InvalidArgument);
}

TEST(Symplectic, RandomMatricesAreSymplectic)
{
    std::mt19937_64 rng(60);
    for (int g = 1; g <= 3; ++g)
        for (int t = 0; t < 30; ++t) {
            const IntMatrix m = random_symplectic(g, rng);
            EXPECT_TRUE(is_symplectic(m));
            EXPECT_TRUE(is_symplectic_mod(reduce_mod(m, 5), 5));
        }
}

TEST(Symplectic, AbelianizationIsHomomorphism)
{
    std::mt19937_64 rng(61);
    for (std::uint32_t p : {3u, 5u})
        for (int g = 1; g <= 3; ++g)
            for (int t = 0; t < 20; ++t) {
                auto pick = [&] {
                    const int i = 1 + static_cast<int>(rng() % g), j = 1 + static_cast<int>(rng() % g);
                    return rng() % 2 ? gen_M(i, j, p, g) : gen_N(i, j, p, g);
                };
                const IntMatrix x = pick(), y = pick();
                const ModMatrix ax = sp_abel(x, p), ay = sp_abel(y, p);
                EXPECT_TRUE(is_sp_lie(ax, p));
                EXPECT_EQ(sp_abel(x * y, p), reduce_mod(ax + ay, p));
                // Sp[p^2] is in the kernel
                IntMatrix xp = IntMatrix::identity(2 * g);
                for (std::uint32_t k = 0; k < p; ++k) xp = xp * x;
                EXPECT_TRUE(is_zero_mod(sp_abel(xp, p), p));
            }
}

TEST(Symplectic, AbelianizationOfGenerators)
{
    const std::uint32_t p = 3;
    const ModMatrix e = reduce_mod(elementary_symmetric(1, 2, 2), p);
    const ModMatrix zero(2, 2);
    const ModMatrix a = sp_abel(gen_M(1, 2, p, 2), p);
    EXPECT_EQ(block_of(a, 0, 1), e);
    EXPECT_EQ(block_of(a, 0, 0), zero);
    EXPECT_EQ(block_of(a, 1, 0), zero);
    const ModMatrix b = sp_abel(gen_N(1, 2, p, 2), p);
    EXPECT_EQ(block_of(b, 1, 0), e);
    EXPECT_EQ(block_of(b, 0, 1), zero);
    EXPECT_THROW(sp_abel(omega(2), p), NotLevelP);
}

TEST(Symplectic, SpLieCondition)
{
    const std::uint32_t p = 5;
    ModMatrix a(2, 2);
    a(0, 1) = 1; // [[0,1],[0,0]]: A^T Omega + Omega A = 0
    EXPECT_TRUE(is_sp_lie(a, p));
    ModMatrix b(2, 2);
    b(0, 0) = 1;
    EXPECT_FALSE(is_sp_lie(b, p));
}

TEST(Symplectic, ModularLinearAlgebra)
{
    ModMatrix m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(1, 0) = 3;
    m(1, 1) = 4;
    const auto inv = mod_inverse(m, 5);
    ASSERT_TRUE(inv.has_value());
    EXPECT_TRUE(is_identity_mod(mod_mul(m, *inv, 5), 5));
    m(1, 1) = 6; // det = 0
    EXPECT_FALSE(mod_inverse(m, 5).has_value());
    EXPECT_EQ(mod_rank({{1, 2}, {2, 4}, {0, 1}}, 3), 2);
    EXPECT_EQ(mod_rank({{3, 6}}, 3), 0);
}

TEST(Symplectic, HeegaardIdentity)
{
    const HeegaardReduction h = heegaard_reduce(IntMatrix::identity(4), 3);
    EXPECT_EQ(h.X, IntMatrix::identity(4));
    EXPECT_EQ(h.Y, IntMatrix::identity(4));
    EXPECT_TRUE(h.residual_identity);
}

TEST(Symplectic, HeegaardRandom)
{
    std::mt19937_64 rng(62);
    int done = 0;
    for (std::uint32_t p : {3u, 5u})
        for (int g = 1; g <= 3; ++g)
            for (int t = 0; t < 40; ++t) {
                const IntMatrix m = random_symplectic(g, rng);
                HeegaardReduction h;
                try {
                    h = heegaard_reduce(m, p);
                } catch (const NotQHSAtP &) {
                    continue;
                }
                ++done;
                EXPECT_TRUE(h.residual_identity);
                EXPECT_TRUE(h.b_prime_symmetric);
                EXPECT_TRUE(h.x_symplectic);
                EXPECT_TRUE(h.y_symplectic);
                EXPECT_TRUE(h.y_upper_right_zero);
                EXPECT_EQ(h.x_preserves == "L_V" || h.x_preserves == "both", true);
                EXPECT_EQ(h.y_preserves == "L_W" || h.y_preserves == "both", true);
            }
    EXPECT_GT(done, 100);
}

TEST(Symplectic, HeegaardRejectsSingularBlock)
{
    for (int g = 1; g <= 3; ++g) EXPECT_THROW(heegaard_reduce(omega(g), 3), NotQHSAtP);
    IntMatrix bad = IntMatrix::identity(2);
    bad(0, 1) = 1;
    bad(1, 0) = 1;
    EXPECT_THROW(heegaard_reduce(bad, 3), InvalidArgument);
}

TEST(Symplectic, LiftGenerators)
{
    for (int g = 1; g <= 3; ++g)
        for (std::uint32_t p : {3u, 5u})
            for (int i = 1; i <= g; ++i)
                for (int j = 1; j <= g; ++j) {
                    const LiftReport r = lift_generator_check(i, j, p, Rank(g));
                    EXPECT_TRUE(r.ok()) << r.m_expression << " / " << r.n_expression;
                }
}
