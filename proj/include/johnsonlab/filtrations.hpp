#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coeff.hpp"
#include "freegroup.hpp"
#include "magnus.hpp"
#include "sampling.hpp"

namespace johnsonlab {

enum class Verdict { False, True, Unknown };

inline std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    default: return "unknown";
    }
}

inline Verdict verdict_of(bool b) { return b ? Verdict::True : Verdict::False; }

struct MembershipReport {
    SeriesKind series;
    int depth = 1;
    Verdict verdict = Verdict::Unknown;
    std::optional<Monomial> witness; // lowest nonvanishing monomial when the verdict is false
};

// Index of the pair (i, j), 1 <= i < j <= n, in lexicographic order.
inline std::size_t pair_index(int i, int j, int n)
{
    // pairs starting with 1..i-1 come first
    return static_cast<std::size_t>((i - 1) * n - (i - 1) * i / 2 + (j - i - 1));
}

inline std::pair<int, int> pair_at(std::size_t idx, int n)
{
    for (int i = 1; i < n; ++i) {
        const std::size_t row = static_cast<std::size_t>(n - i);
        if (idx < row) return {i, i + 1 + static_cast<int>(idx)};
        idx -= row;
    }
    throw OutOfRange("pair index out of range");
}

inline MembershipReport lcs_report(const Word &u, int k, Rank rank, const Budget &budget = Budget{})
{
    if (k < 1) throw InvalidArgument("depth must be at least 1");
    check_rank(u, rank);
    MembershipReport r{SeriesKind::lcs(), k, Verdict::True, std::nullopt};
    if (k == 1) return r;
    Valuation v = valuation(u, k, rank.n(), IntegerRing{}, budget);
    if (!v.at_least(k)) {
        r.verdict = Verdict::False;
        r.witness = v.witness;
    }
    return r;
}

inline bool in_lcs(const Word &u, int k, Rank rank, const Budget &budget = Budget{})
{
    return lcs_report(u, k, rank, budget).verdict == Verdict::True;
}

inline MembershipReport zassenhaus_report(const Word &u, int k, std::uint32_t p, Rank rank,
                                          const Budget &budget = Budget{})
{
    if (k < 1) throw InvalidArgument("depth must be at least 1");
    check_rank(u, rank);
    MembershipReport r{SeriesKind::zassenhaus(p), k, Verdict::True, std::nullopt};
    if (k == 1) return r;
    Valuation v = valuation(u, k, rank.n(), PrimeField(p), budget);
    if (!v.at_least(k)) {
        r.verdict = Verdict::False;
        r.witness = v.witness;
    }
    return r;
}

inline bool in_zassenhaus(const Word &u, int k, std::uint32_t p, Rank rank, const Budget &budget = Budget{})
{
    return zassenhaus_report(u, k, p, rank, budget).verdict == Verdict::True;
}

// Image of a level-2 Stallings element in the wedge-square plus linear decomposition.
struct L2SImage {
    int n = 0;
    std::uint32_t p = 3;
    std::vector<std::uint32_t> wedge;  // indexed by pair_index(i, j, n)
    std::vector<std::uint32_t> linear; // length n

    L2SImage() = default;
    L2SImage(int n_, std::uint32_t p_)
        : n(n_), p(p_), wedge(static_cast<std::size_t>(n_ * (n_ - 1) / 2), 0), linear(n_, 0)
    {
    }

    bool is_zero() const
    {
        for (auto c : wedge)
            if (c) return false;
        for (auto c : linear)
            if (c) return false;
        return true;
    }

    std::uint32_t wedge_at(int i, int j) const
    {
        if (i == j) return 0;
        if (i < j) return wedge[pair_index(i, j, n)];
        const auto c = wedge[pair_index(j, i, n)];
        return c == 0 ? 0 : p - c;
    }

    L2SImage &operator+=(const L2SImage &o)
    {
        if (n != o.n || p != o.p) throw Incompatible("L2S images of different shape");
        for (std::size_t i = 0; i < wedge.size(); ++i) wedge[i] = (wedge[i] + o.wedge[i]) % p;
        for (std::size_t i = 0; i < linear.size(); ++i) linear[i] = (linear[i] + o.linear[i]) % p;
        return *this;
    }

    friend L2SImage operator+(L2SImage a, const L2SImage &b) { return a += b; }
    friend bool operator==(const L2SImage &, const L2SImage &) = default;
};

inline bool in_level2(const Word &u, std::uint32_t p, Rank rank)
{
    for (long long e : exponent_vector(u, rank))
        if (residue(e, p) != 0) return false;
    return true;
}

// Wedge part: (coeff(w_i w_j) - coeff(w_j w_i)) / 2 of the integer Magnus expansion, reduced mod p,
// so that [x_i, x_j] maps to e_ij. Linear part: exponent vector divided by p, reduced mod p.
inline L2SImage l2s_image(const Word &u, std::uint32_t p, Rank rank)
{
    require_odd_prime(p);
    const auto ev = exponent_vector(u, rank);
    for (long long e : ev)
        if (residue(e, p) != 0) throw NotInLevel2("exponent vector is not divisible by p");
    const int n = rank.n();
    L2SImage img(n, p);
    for (int i = 0; i < n; ++i) img.linear[i] = residue(ev[i] / static_cast<long long>(p), p);
    auto s = magnus_embed(u, 2, n, IntegerRing{}, Budget::unlimited());
    const auto &deg2 = s.part(2);
    const PrimeField field(p);
    const std::uint32_t half = field.inverse(2);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Integer c = deg2[(i - 1) * n + (j - 1)] - deg2[(j - 1) * n + (i - 1)];
            img.wedge[pair_index(i, j, n)] = field.mul(residue(c, p), half);
        }
    return img;
}

inline MembershipReport stallings_report(const Word &u, int k, std::uint32_t p, Rank rank)
{
    if (k < 1) throw InvalidArgument("depth must be at least 1");
    check_rank(u, rank);
    MembershipReport r{SeriesKind::stallings(p), k, Verdict::True, std::nullopt};
    if (k == 1) return r;
    if (k >= 4) {
        r.verdict = Verdict::Unknown;
        return r;
    }
    const auto ev = exponent_vector(u, rank);
    for (int i = 0; i < rank.n(); ++i)
        if (residue(ev[i], p) != 0) {
            r.verdict = Verdict::False;
            r.witness = Monomial({i + 1});
            return r;
        }
    if (k == 2) return r;
    const L2SImage img = l2s_image(u, p, rank);
    for (std::size_t idx = 0; idx < img.wedge.size(); ++idx)
        if (img.wedge[idx]) {
            auto [i, j] = pair_at(idx, rank.n());
            r.verdict = Verdict::False;
            r.witness = Monomial({i, j});
            return r;
        }
    for (int i = 0; i < rank.n(); ++i)
        if (img.linear[i]) {
            r.verdict = Verdict::False;
            r.witness = Monomial({i + 1});
            return r;
        }
    return r;
}

inline Verdict in_stallings(const Word &u, int k, std::uint32_t p, Rank rank)
{
    return stallings_report(u, k, p, rank).verdict;
}

inline MembershipReport member(const Word &u, SeriesKind series, int k, Rank rank, const Budget &budget = Budget{})
{
    switch (series.kind) {
    case SeriesKind::Kind::LCS: return lcs_report(u, k, rank, budget);
    case SeriesKind::Kind::Stallings: return stallings_report(u, k, series.p, rank);
    default: return zassenhaus_report(u, k, series.p, rank, budget);
    }
}

enum class CofinalityDirection { StoZ, ZtoS };

struct CofinalityReport {
    CofinalityDirection direction = CofinalityDirection::StoZ;
    int depth = 1;
    std::uint32_t p = 3;
    int samples = 0;
    std::vector<Word> counterexamples;
};

// StoZ samples the l-th Stallings term and tests Zassenhaus membership at depth l;
// ZtoS samples the p^l-th Zassenhaus term and tests Stallings membership at depth l.
inline CofinalityReport cofinality_check(CofinalityDirection dir, int l, std::uint32_t p, int count,
                                         std::uint64_t seed, Rank rank, const Budget &budget = Budget{})
{
    require_odd_prime(p);
    if (l < 1) throw InvalidArgument("depth must be at least 1");
    if (dir == CofinalityDirection::ZtoS && l > 3)
        throw InvalidArgument("exact Stallings membership is only available up to depth 3");
    CofinalityReport rep{dir, l, p, count, {}};
    if (dir == CofinalityDirection::StoZ) {
        for (const Word &w : sample_series(SeriesKind::stallings(p), l, count, seed, rank))
            if (!in_zassenhaus(w, l, p, rank, budget)) rep.counterexamples.push_back(w);
    } else {
        long long depth = 1;
        for (int i = 0; i < l; ++i) depth *= p;
        for (const Word &w : sample_series(SeriesKind::zassenhaus(p), static_cast<int>(depth), count, seed, rank))
            if (in_stallings(w, l, p, rank) != Verdict::True) rep.counterexamples.push_back(w);
    }
    return rep;
}

} // namespace johnsonlab
