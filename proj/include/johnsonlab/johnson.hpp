#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coeff.hpp"
#include "filtrations.hpp"
#include "freegroup.hpp"
#include "groupring.hpp"
#include "magnus.hpp"
#include "mapclass.hpp"
#include "symplectic.hpp"

namespace johnsonlab {

// f(x_i) x_i^-1 for each generator.
inline std::vector<Word> displacement_words(const FreeAutomorphism &f)
{
    std::vector<Word> out;
    for (int i = 1; i <= f.rank().n(); ++i) out.push_back(f.image(i) * Word::generator(i, -1));
    return out;
}

// True iff every f(x_i) x_i^-1 lies in the (k+1)-st term of the series; Unknown propagates.
inline Verdict filtration_member(const FreeAutomorphism &f, SeriesKind series, int k, const Budget &budget = Budget{})
{
    if (k < 1) throw InvalidArgument("filtration level must be at least 1");
    Verdict out = Verdict::True;
    for (const Word &u : displacement_words(f)) {
        const Verdict v = member(u, series, k + 1, f.rank(), budget).verdict;
        if (v == Verdict::False) return Verdict::False;
        if (v == Verdict::Unknown) out = Verdict::Unknown;
    }
    return out;
}

// Row i is the degree-(k+1) part of Mag(f(x_i) x_i^-1), as a dense table over n^(k+1) monomials.
struct JohnsonValue {
    int level = 1;
    CoefficientRing ring;
    int n = 2;
    std::vector<std::vector<Integer>> rows;

    bool is_zero() const
    {
        for (const auto &r : rows)
            for (const auto &c : r)
                if (c != 0) return false;
        return true;
    }

    JohnsonValue &operator+=(const JohnsonValue &o)
    {
        if (level != o.level || !(ring == o.ring) || n != o.n) throw Incompatible("Johnson values of different shape");
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t m = 0; m < rows[i].size(); ++m) {
                rows[i][m] += o.rows[i][m];
                if (!ring.is_integers()) rows[i][m] = residue(rows[i][m], ring.p);
            }
        return *this;
    }

    friend JohnsonValue operator+(JohnsonValue a, const JohnsonValue &b) { return a += b; }
    friend bool operator==(const JohnsonValue &, const JohnsonValue &) = default;
};

namespace detail {

template <class R>
JohnsonValue tau_over(const FreeAutomorphism &f, int k, R ring, const Budget &budget)
{
    const int n = f.rank().n();
    JohnsonValue v{k, ring.descriptor(), n, {}};
    for (const Word &u : displacement_words(f)) {
        auto s = magnus_embed(u, k + 1, n, ring, budget);
        for (int d = 1; d <= k; ++d)
            if (!s.part_is_zero(d))
                throw NotInFiltration(f.label() + " is not in level " + std::to_string(k) + " of the " +
                                      (ring.descriptor().is_integers() ? std::string("Johnson") : std::string("mod-p Johnson")) +
                                      " filtration");
        std::vector<Integer> row;
        row.reserve(s.part(k + 1).size());
        for (const auto &c : s.part(k + 1)) row.push_back(ring.to_integer(c));
        v.rows.push_back(std::move(row));
    }
    return v;
}

} // namespace detail

// Integral (LCS) or Zassenhaus Johnson homomorphism at level k.
inline JohnsonValue tau(const FreeAutomorphism &f, int k, SeriesKind series, const Budget &budget = Budget{})
{
    if (k < 1) throw InvalidArgument("Johnson level must be at least 1");
    switch (series.kind) {
    case SeriesKind::Kind::LCS: return detail::tau_over(f, k, IntegerRing{}, budget);
    case SeriesKind::Kind::Zassenhaus: return detail::tau_over(f, k, PrimeField(series.p), budget);
    default: throw InvalidArgument("the Stallings variant is only available at level 1 through tau1_s");
    }
}

inline JohnsonValue reduce_mod(const JohnsonValue &v, std::uint32_t p)
{
    JohnsonValue out = v;
    out.ring = CoefficientRing::prime_field(p);
    for (auto &r : out.rows)
        for (auto &c : r) c = residue(c, p);
    return out;
}

struct Tau1SValue {
    std::uint32_t p = 3;
    int n = 2;
    std::vector<L2SImage> columns; // column i: image of f(x_i) x_i^-1
    ModMatrix sp_part;             // linear parts in the block basis

    bool is_zero() const
    {
        for (const auto &c : columns)
            if (!c.is_zero()) return false;
        return true;
    }

    Tau1SValue &operator+=(const Tau1SValue &o)
    {
        if (p != o.p || n != o.n) throw Incompatible("tau1_s values of different shape");
        for (std::size_t i = 0; i < columns.size(); ++i) columns[i] += o.columns[i];
        sp_part = reduce_mod(sp_part + o.sp_part, p);
        return *this;
    }

    friend Tau1SValue operator+(Tau1SValue a, const Tau1SValue &b) { return a += b; }
    friend bool operator==(const Tau1SValue &, const Tau1SValue &) = default;
};

inline Tau1SValue tau1_s(const FreeAutomorphism &f, std::uint32_t p)
{
    require_odd_prime(p);
    if (congruence_level(f, p) < 1)
        throw NotInFiltration(f.label() + " does not act trivially on homology mod " + std::to_string(p));
    const Rank rank = f.rank();
    const int g = rank.g, n = rank.n();
    Tau1SValue v;
    v.p = p;
    v.n = n;
    v.sp_part = ModMatrix(n, n);
    const auto words = displacement_words(f);
    for (int i = 1; i <= n; ++i) {
        L2SImage img = l2s_image(words[i - 1], p, rank);
        for (int r = 1; r <= n; ++r) v.sp_part(block_position(r, g), block_position(i, g)) = img.linear[r - 1];
        v.columns.push_back(std::move(img));
    }
    return v;
}

// Triples a < b < c of 1..n in lexicographic order.
inline std::vector<std::array<int, 3>> triples(int n)
{
    std::vector<std::array<int, 3>> out;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c) out.push_back({a, b, c});
    return out;
}

struct Wedge3Result {
    bool member = false;
    std::vector<std::uint32_t> coordinates; // over triples(n), when member
    // When not a member: y with y^T A = 0 and y^T T != 0 for the inclusion matrix A
    // and target tensor T (coordinates over H (x) wedge^2 in the word basis).
    std::vector<std::uint32_t> certificate;
    std::string reason;
};

// Antisymmetric coordinates r_i(a<b) of each row; empty if some row is not antisymmetric mod p.
inline std::optional<std::vector<std::vector<long long>>> wedge_rows(const JohnsonValue &v, std::uint32_t p,
                                                                    std::string *why = nullptr)
{
    const int n = v.n;
    std::vector<std::vector<long long>> rows;
    for (int i = 0; i < n; ++i) {
        const auto &t = v.rows.at(i);
        std::vector<long long> r(static_cast<std::size_t>(n * (n - 1) / 2), 0);
        for (int a = 1; a <= n; ++a)
            for (int b = a; b <= n; ++b) {
                const auto ab = residue(t[(a - 1) * n + (b - 1)], p);
                const auto ba = residue(t[(b - 1) * n + (a - 1)], p);
                if ((ab + ba) % p != 0) {
                    if (why)
                        *why = "row " + std::to_string(i + 1) + " is not antisymmetric at (" + std::to_string(a) + "," +
                               std::to_string(b) + ")";
                    return std::nullopt;
                }
                if (a < b) r[pair_index(a, b, n)] = ab;
            }
        rows.push_back(std::move(r));
    }
    return rows;
}

// Solves the inclusion wedge^3 -> H (x) wedge^2, x^y^z -> x(y^z) + y(z^x) + z(x^y), for the tensor
// T with r_i = sum_m i(e_i, e_m) T_m, where r_i are the antisymmetric rows of a level-1 value.
inline Wedge3Result wedge3_membership(const JohnsonValue &v, std::uint32_t p)
{
    require_odd_prime(p);
    if (v.level != 1) throw InvalidArgument("wedge3_membership needs a level-1 value");
    const int n = v.n, g = n / 2;
    const std::size_t np = static_cast<std::size_t>(n * (n - 1) / 2);
    Wedge3Result res;
    std::string why;
    auto rows = wedge_rows(v, p, &why);
    if (!rows) {
        res.reason = why;
        return res;
    }
    // J_{im} = i(e_i, e_m) in the word basis.
    ModMatrix J(n, n);
    for (int i = 1; i <= n; ++i)
        for (int m = 1; m <= n; ++m) {
            HomologyClass ei(n, 0), em(n, 0);
            ei[block_position(i, g)] = 1;
            em[block_position(m, g)] = 1;
            J(i - 1, m - 1) = residue(intersection(ei, em, g), p);
        }
    const auto Jinv = mod_inverse(J, p);
    if (!Jinv) throw InvariantViolation("intersection matrix is singular");
    // Target vector over H (x) wedge^2: index m * np + pair.
    std::vector<long long> target(static_cast<std::size_t>(n) * np, 0);
    for (int m = 0; m < n; ++m)
        for (std::size_t q = 0; q < np; ++q) {
            long long s = 0;
            for (int i = 0; i < n; ++i) s += (*Jinv)(m, i) * (*rows)[i][q];
            target[m * np + q] = residue(s, p);
        }
    const auto tri = triples(n);
    const std::size_t R = target.size(), C = tri.size();
    // Augmented system [A | T | I] reduced by row operations.
    const std::size_t W = C + 1 + R;
    std::vector<std::vector<long long>> M(R, std::vector<long long>(W, 0));
    for (std::size_t t = 0; t < C; ++t) {
        const auto [a, b, c] = tri[t];
        M[(a - 1) * np + pair_index(b, c, n)][t] += 1;
        M[(b - 1) * np + pair_index(a, c, n)][t] += p - 1; // z^x = -(x^z)
        M[(c - 1) * np + pair_index(a, b, n)][t] += 1;
    }
    for (std::size_t r = 0; r < R; ++r) {
        M[r][C] = target[r];
        M[r][C + 1 + r] = 1;
        for (auto &x : M[r]) x %= p;
    }
    const PrimeField field(p);
    std::vector<int> pivot_col_of_row;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < C && rank < R; ++c) {
        std::size_t piv = R;
        for (std::size_t r = rank; r < R; ++r)
            if (M[r][c]) {
                piv = r;
                break;
            }
        if (piv == R) continue;
        std::swap(M[rank], M[piv]);
        const long long s = field.inverse(static_cast<std::uint32_t>(M[rank][c]));
        for (auto &x : M[rank]) x = x * s % p;
        for (std::size_t r = 0; r < R; ++r) {
            if (r == rank || M[r][c] == 0) continue;
            const long long f = M[r][c];
            for (std::size_t j = 0; j < W; ++j) M[r][j] = residue(M[r][j] - f * M[rank][j], p);
        }
        pivot_col_of_row.push_back(static_cast<int>(c));
        ++rank;
    }
    for (std::size_t r = rank; r < R; ++r)
        if (M[r][C] != 0) {
            res.reason = "tensor is not in the image of wedge^3";
            res.certificate.assign(R, 0);
            for (std::size_t j = 0; j < R; ++j) res.certificate[j] = static_cast<std::uint32_t>(M[r][C + 1 + j]);
            return res;
        }
    res.member = true;
    res.coordinates.assign(C, 0);
    for (std::size_t r = 0; r < rank; ++r) res.coordinates[pivot_col_of_row[r]] = static_cast<std::uint32_t>(M[r][C]);
    return res;
}

// Fox matrix: entry (i, j) = bar(d f(x_j) / d x_i), row-major.
struct FoxMatrix {
    Rank rank;
    std::vector<IntegralGroupRing> entries;

    const IntegralGroupRing &at(int i, int j) const { return entries.at((i - 1) * rank.n() + (j - 1)); }
    IntegralGroupRing &at(int i, int j) { return entries.at((i - 1) * rank.n() + (j - 1)); }
    friend bool operator==(const FoxMatrix &a, const FoxMatrix &b) { return a.entries == b.entries; }
};

inline FoxMatrix fox_matrix(const FreeAutomorphism &f)
{
    const Rank rank = f.rank();
    const int n = rank.n();
    FoxMatrix B{rank, std::vector<IntegralGroupRing>(static_cast<std::size_t>(n) * n)};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) B.at(i, j) = bar(fox_derivative(f.image(j), i, rank));
    return B;
}

inline FoxMatrix operator*(const FoxMatrix &x, const FoxMatrix &y)
{
    const int n = x.rank.n();
    FoxMatrix z{x.rank, std::vector<IntegralGroupRing>(static_cast<std::size_t>(n) * n)};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) z.at(i, j) += x.at(i, k) * y.at(k, j);
    return z;
}

// Applies f to every group-ring entry.
inline FoxMatrix act(const FreeAutomorphism &f, const FoxMatrix &B)
{
    FoxMatrix out = B;
    for (auto &e : out.entries) e = map_words(e, [&](const Word &w) { return f.apply(w); });
    return out;
}

// Degree-l coefficient tables (over F_p) of the Magnus images of the Fox-matrix entries.
struct TaylorBlock {
    int degree = 0;
    int n = 2;
    std::uint32_t p = 3;
    std::vector<std::vector<std::uint32_t>> tables; // row-major entries, each of size n^degree

    bool is_zero() const
    {
        for (const auto &t : tables)
            for (auto c : t)
                if (c) return false;
        return true;
    }

    bool is_identity() const
    {
        if (degree != 0) return false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (tables[i * n + j][0] != (i == j ? 1u : 0u)) return false;
        return true;
    }
};

// All blocks of degree 0..D from one expansion of each entry.
inline std::vector<TaylorBlock> taylor_blocks(const FoxMatrix &B, int D, std::uint32_t p, const Budget &budget = Budget{})
{
    const int n = B.rank.n();
    const PrimeField field(p);
    const int trunc = D < 1 ? 1 : D;
    check_budget(n, trunc, budget);
    std::vector<TaylorBlock> blocks;
    for (int l = 0; l <= D; ++l) blocks.push_back({l, n, p, {}});
    for (const auto &e : B.entries) {
        const auto s = magnus_embed(change_ring(e, field), trunc, n, budget);
        for (int l = 0; l <= D; ++l) blocks[l].tables.push_back(s.part(l));
    }
    return blocks;
}

inline TaylorBlock taylor_block(const FoxMatrix &B, int l, std::uint32_t p, const Budget &budget = Budget{})
{
    if (l < 0) throw InvalidArgument("Taylor block degree must be nonnegative");
    return taylor_blocks(B, l, p, budget).at(l);
}

// B_0 = Id and B_l = 0 for l = 1..k-1, modulo p.
inline bool perron_member(const FreeAutomorphism &f, int k, std::uint32_t p, const Budget &budget = Budget{})
{
    if (k < 1) throw InvalidArgument("filtration level must be at least 1");
    const auto blocks = taylor_blocks(fox_matrix(f), k - 1, p, budget);
    if (!blocks[0].is_identity()) return false;
    for (int l = 1; l <= k - 1; ++l)
        if (!blocks[l].is_zero()) return false;
    return true;
}

} // namespace johnsonlab
