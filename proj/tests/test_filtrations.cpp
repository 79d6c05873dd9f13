#include <gtest/gtest.h>

#include <random>

#include "johnsonlab/filtrations.hpp"
#include "oracles.hpp"

using namespace johnsonlab;

namespace {

const Word x1 = Word::generator(1), x2 = Word::generator(2), x3 = Word::generator(3), x4 = Word::generator(4);

} // namespace

TEST(Filtrations, LowerCentralSeries)
{
    const Rank rank(2);
    const Word c2 = commutator(x1, x2), c3 = commutator(x1, c2), c4 = commutator(x2, c3);
    EXPECT_TRUE(in_lcs(x1, 1, rank));
    EXPECT_FALSE(in_lcs(x1, 2, rank));
    EXPECT_TRUE(in_lcs(c2, 2, rank));
    EXPECT_FALSE(in_lcs(c2, 3, rank));
    EXPECT_TRUE(in_lcs(c3, 3, rank));
    EXPECT_FALSE(in_lcs(c3, 4, rank));
    EXPECT_TRUE(in_lcs(c4, 4, rank));
    EXPECT_TRUE(in_lcs(Word{}, 6, rank));
    const auto r = lcs_report(c2, 3, rank);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(r.witness->degree(), 2);
}

TEST(Filtrations, ZassenhausSeries)
{
    const Rank rank(1);
    for (std::uint32_t p : {3u, 5u}) {
        EXPECT_TRUE(in_zassenhaus(power(commutator(x1, x2), p), 2 * p, p, rank));
        EXPECT_FALSE(in_zassenhaus(power(commutator(x1, x2), p), 2 * p + 1, p, rank));
        EXPECT_TRUE(in_zassenhaus(commutator(x1, power(x2, p)), p + 1, p, rank));
        EXPECT_FALSE(in_zassenhaus(commutator(x1, power(x2, p)), p + 2, p, rank));
    }
    EXPECT_TRUE(in_zassenhaus(power(x1, 9), 9, 3, rank));
    EXPECT_FALSE(in_zassenhaus(power(x1, 9), 10, 3, rank));
    EXPECT_THROW(in_zassenhaus(power(x1, 25), 26, 5, Rank(2)), BudgetExceeded);
}

TEST(Filtrations, StallingsSeries)
{
    const Rank rank(2);
    const std::uint32_t p = 3;
    // elements of the third term: [G2, G], G2^p
    for (const Word &w : {commutator(power(x1, p), x2), commutator(commutator(x1, x2), x3), power(x1, p * p),
                          power(commutator(x1, x2), p), commutator(power(x1, p), power(x2, p))})
        EXPECT_EQ(in_stallings(w, 3, p, rank), Verdict::True) << to_string(w);
    const auto r = stallings_report(commutator(x1, x2), 3, p, rank);
    EXPECT_EQ(r.verdict, Verdict::False);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(r.witness->vars, (std::vector<int>{1, 2}));
    EXPECT_EQ(in_stallings(x1, 2, p, rank), Verdict::False);
    EXPECT_EQ(in_stallings(x1, 1, p, rank), Verdict::True);
    EXPECT_EQ(in_stallings(Word{}, 4, p, rank), Verdict::Unknown);
}

TEST(Filtrations, L2SImageGenerators)
{
    const Rank rank(2);
    for (std::uint32_t p : {3u, 5u}) {
        const L2SImage c = l2s_image(commutator(x1, x3), p, rank);
        EXPECT_EQ(c.wedge_at(1, 3), 1u);
        EXPECT_EQ(c.wedge_at(3, 1), p - 1);
        for (auto v : c.linear) EXPECT_EQ(v, 0u);
        const L2SImage q = l2s_image(power(x2, p), p, rank);
        EXPECT_EQ(q.linear, (std::vector<std::uint32_t>{0, 1, 0, 0}));
        for (auto v : q.wedge) EXPECT_EQ(v, 0u);
        EXPECT_THROW(l2s_image(x1, p, rank), NotInLevel2);
    }
}

TEST(Filtrations, L2SImageIsHomomorphism)
{
    const Rank rank(2);
    std::mt19937_64 rng(30);
    for (std::uint32_t p : {3u, 5u}) {
        const auto level2 = sample_series(SeriesKind::stallings(p), 2, 60, 99 + p, rank);
        for (std::size_t t = 0; t + 1 < level2.size(); ++t) {
            const Word &a = level2[t], &b = level2[t + 1];
            EXPECT_EQ(l2s_image(a * b, p, rank), l2s_image(a, p, rank) + l2s_image(b, p, rank));
            const Word c = oracle::random_word(rng, rank.n(), 4);
            EXPECT_EQ(l2s_image(conjugate(a, c), p, rank), l2s_image(a, p, rank)) << "image is conjugation invariant";
        }
    }
}

TEST(Filtrations, MemberDispatch)
{
    const Rank rank(1);
    const Word w = power(x1, 3);
    EXPECT_EQ(member(w, SeriesKind::lcs(), 2, rank).verdict, Verdict::False);
    EXPECT_EQ(member(w, SeriesKind::stallings(3), 2, rank).verdict, Verdict::True);
    EXPECT_EQ(member(w, SeriesKind::zassenhaus(3), 3, rank).verdict, Verdict::True);
    EXPECT_THROW(member(w, SeriesKind::lcs(), 0, rank), InvalidArgument);
    EXPECT_THROW(member(x3, SeriesKind::lcs(), 2, rank), InvalidGenerator);
}

TEST(Filtrations, PairIndexRoundTrip)
{
    for (int n : {2, 4, 6}) {
        std::size_t q = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j, ++q) {
                EXPECT_EQ(pair_index(i, j, n), q);
                EXPECT_EQ(pair_at(q, n), std::make_pair(i, j));
            }
    }
}

TEST(Filtrations, CofinalityReports)
{
    const Rank rank(2);
    const auto a = cofinality_check(CofinalityDirection::StoZ, 3, 3, 20, 5, rank);
    EXPECT_EQ(a.samples, 20);
    EXPECT_TRUE(a.counterexamples.empty());
    const auto b = cofinality_check(CofinalityDirection::ZtoS, 2, 5, 10, 5, rank);
    EXPECT_TRUE(b.counterexamples.empty());
    EXPECT_THROW(cofinality_check(CofinalityDirection::ZtoS, 4, 3, 1, 0, rank), InvalidArgument);
    EXPECT_THROW(cofinality_check(CofinalityDirection::StoZ, 1, 4, 1, 0, rank), InvalidArgument);
}
