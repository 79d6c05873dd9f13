#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "coeff.hpp"
#include "errors.hpp"

namespace johnsonlab {

// Dense row-major matrix.
template <class T>
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<T> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, T(0)) {}

    static Matrix identity(int n)
    {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    T &operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const T &operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    Matrix transpose() const
    {
        Matrix t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const Matrix &, const Matrix &) = default;

    friend Matrix operator*(const Matrix &x, const Matrix &y)
    {
        if (x.cols != y.rows) throw Incompatible("matrix shapes do not compose");
        Matrix z(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                const T &v = x(i, k);
                if (v == 0) continue;
                for (int j = 0; j < y.cols; ++j) z(i, j) += v * y(k, j);
            }
        return z;
    }

    friend Matrix operator+(Matrix x, const Matrix &y)
    {
        if (x.rows != y.rows || x.cols != y.cols) throw Incompatible("matrix shapes differ");
        for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] += y.a[i];
        return x;
    }

    friend Matrix operator-(Matrix x, const Matrix &y)
    {
        if (x.rows != y.rows || x.cols != y.cols) throw Incompatible("matrix shapes differ");
        for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] -= y.a[i];
        return x;
    }

    Matrix scaled(const T &s) const
    {
        Matrix m = *this;
        for (auto &v : m.a) v *= s;
        return m;
    }
};

using IntMatrix = Matrix<Integer>;
// Residues mod p stored in [0, p).
using ModMatrix = Matrix<long long>;

// Position in the block basis (a_1..a_g, b_1..b_g) of the 1-based word generator x_idx.
inline int block_position(int idx, int g) { return idx % 2 == 1 ? (idx - 1) / 2 : g + idx / 2 - 1; }

// 1-based word generator sitting at block position pos.
inline int word_generator(int pos, int g) { return pos < g ? 2 * pos + 1 : 2 * (pos - g) + 2; }

inline IntMatrix omega(int g)
{
    IntMatrix m(2 * g, 2 * g);
    for (int i = 0; i < g; ++i) {
        m(i, g + i) = 1;
        m(g + i, i) = -1;
    }
    return m;
}

// Intersection pairing i(u, v) = v^T Omega u in the block basis; i(a_k, b_k) = -1.
inline Integer intersection(const std::vector<Integer> &u, const std::vector<Integer> &v, int g)
{
    Integer s = 0;
    for (int i = 0; i < g; ++i) s += v[i] * u[g + i] - v[g + i] * u[i];
    return s;
}

inline ModMatrix reduce_mod(const IntMatrix &m, std::uint32_t p)
{
    ModMatrix r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = residue(m.a[i], p);
    return r;
}

inline ModMatrix reduce_mod(const ModMatrix &m, std::uint32_t p)
{
    ModMatrix r = m;
    for (auto &v : r.a) v = residue(v, p);
    return r;
}

inline IntMatrix lift(const ModMatrix &m)
{
    IntMatrix r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = m.a[i];
    return r;
}

inline ModMatrix mod_mul(const ModMatrix &x, const ModMatrix &y, std::uint32_t p)
{
    return reduce_mod(x * y, p);
}

inline bool is_identity_mod(const ModMatrix &m, std::uint32_t p)
{
    return reduce_mod(m, p) == ModMatrix::identity(m.rows);
}

inline bool is_zero_mod(const ModMatrix &m, std::uint32_t p)
{
    for (auto v : m.a)
        if (residue(v, p) != 0) return false;
    return true;
}

// Inverse over F_p by Gauss-Jordan elimination; empty if singular.
inline std::optional<ModMatrix> mod_inverse(const ModMatrix &m, std::uint32_t p)
{
    if (m.rows != m.cols) throw Incompatible("inverse of a non-square matrix");
    const int n = m.rows;
    const PrimeField field(p);
    ModMatrix a = reduce_mod(m, p), inv = ModMatrix::identity(n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        for (int j = 0; j < n; ++j) {
            std::swap(a(c, j), a(piv, j));
            std::swap(inv(c, j), inv(piv, j));
        }
        const long long s = field.inverse(static_cast<std::uint32_t>(a(c, c)));
        for (int j = 0; j < n; ++j) {
            a(c, j) = a(c, j) * s % p;
            inv(c, j) = inv(c, j) * s % p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || a(r, c) == 0) continue;
            const long long f = a(r, c);
            for (int j = 0; j < n; ++j) {
                a(r, j) = residue(a(r, j) - f * a(c, j), p);
                inv(r, j) = residue(inv(r, j) - f * inv(c, j), p);
            }
        }
    }
    return inv;
}

// Rank over F_p of a list of row vectors.
inline int mod_rank(std::vector<std::vector<long long>> rows, std::uint32_t p)
{
    if (rows.empty()) return 0;
    const PrimeField field(p);
    const std::size_t cols = rows[0].size();
    for (auto &r : rows)
        for (auto &v : r) v = residue(v, p);
    int rank = 0;
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (rows[r][c] != 0) {
                piv = static_cast<int>(r);
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        const long long s = field.inverse(static_cast<std::uint32_t>(rows[rank][c]));
        for (auto &v : rows[rank]) v = v * s % p;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == rank || rows[r][c] == 0) continue;
            const long long f = rows[r][c];
            for (std::size_t j = 0; j < cols; ++j) rows[r][j] = residue(rows[r][j] - f * rows[rank][j], p);
        }
        ++rank;
    }
    return rank;
}

inline int genus_of(int dim)
{
    if (dim <= 0 || dim % 2) throw Incompatible("symplectic matrices have even positive size");
    return dim / 2;
}

inline bool is_symplectic(const IntMatrix &m)
{
    if (m.rows != m.cols || m.rows % 2 || m.rows == 0) return false;
    const IntMatrix w = omega(m.rows / 2);
    return m.transpose() * w * m == w;
}

inline bool is_symplectic_mod(const ModMatrix &m, std::uint32_t p)
{
    if (m.rows != m.cols || m.rows % 2 || m.rows == 0) return false;
    const ModMatrix w = reduce_mod(omega(m.rows / 2), p);
    return mod_mul(mod_mul(m.transpose(), w, p), m, p) == w;
}

inline bool is_sp_lie(const ModMatrix &a, std::uint32_t p)
{
    if (a.rows != a.cols || a.rows % 2 || a.rows == 0) return false;
    const ModMatrix w = reduce_mod(omega(a.rows / 2), p);
    return is_zero_mod(a.transpose() * w + w * a, p);
}

// Exact inverse of a symplectic matrix: -Omega M^T Omega.
inline IntMatrix symplectic_inverse(const IntMatrix &m)
{
    const IntMatrix w = omega(genus_of(m.rows));
    return (w * m.transpose() * w).scaled(-1);
}

// E_{i,j}: ones at (i,j) and (j,i); a single one when i = j.
inline IntMatrix elementary_symmetric(int i, int j, int g)
{
    IntMatrix e(g, g);
    e(i - 1, j - 1) = 1;
    e(j - 1, i - 1) = 1;
    return e;
}

inline void check_pair(int i, int j, int g)
{
    if (i < 1 || j < 1 || i > g || j > g)
        throw InvalidArgument("generator indices must lie in 1.." + std::to_string(g));
}

// [[Id, p E_ij], [0, Id]]: b_i -> b_i + p a_j.
inline IntMatrix gen_M(int i, int j, std::uint32_t p, int g)
{
    check_pair(i, j, g);
    IntMatrix m = IntMatrix::identity(2 * g);
    const IntMatrix e = elementary_symmetric(i, j, g);
    for (int r = 0; r < g; ++r)
        for (int c = 0; c < g; ++c) m(r, g + c) += e(r, c) * p;
    return m;
}

// [[Id, 0], [p E_ij, Id]]: a_i -> a_i + p b_j.
inline IntMatrix gen_N(int i, int j, std::uint32_t p, int g)
{
    check_pair(i, j, g);
    IntMatrix m = IntMatrix::identity(2 * g);
    const IntMatrix e = elementary_symmetric(i, j, g);
    for (int r = 0; r < g; ++r)
        for (int c = 0; c < g; ++c) m(g + r, c) += e(r, c) * p;
    return m;
}

// 0: not congruent to Id mod p; 1: Id mod p; 2: Id mod p^2.
inline int congruence_level(const IntMatrix &m, std::uint32_t p)
{
    const IntMatrix d = m - IntMatrix::identity(m.rows);
    const Integer p2 = Integer(p) * p;
    bool l1 = true, l2 = true;
    for (const auto &v : d.a) {
        if (v % p != 0) l1 = false;
        if (v % p2 != 0) l2 = false;
    }
    return l2 ? 2 : (l1 ? 1 : 0);
}

// abel(Id + pA) = A mod p.
inline ModMatrix sp_abel(const IntMatrix &x, std::uint32_t p)
{
    require_odd_prime(p);
    if (x.rows != x.cols) throw Incompatible("sp_abel needs a square matrix");
    const IntMatrix d = x - IntMatrix::identity(x.rows);
    ModMatrix a(x.rows, x.cols);
    for (std::size_t i = 0; i < d.a.size(); ++i) {
        if (d.a[i] % p != 0) throw NotLevelP("matrix is not congruent to the identity mod " + std::to_string(p));
        a.a[i] = residue(Integer(d.a[i] / p), p);
    }
    if (!is_sp_lie(a, p)) throw InvariantViolation("abelianized matrix fails the sp identity");
    return a;
}

inline ModMatrix block_of(const ModMatrix &m, int bi, int bj)
{
    const int g = genus_of(m.rows);
    ModMatrix b(g, g);
    for (int r = 0; r < g; ++r)
        for (int c = 0; c < g; ++c) b(r, c) = m(bi * g + r, bj * g + c);
    return b;
}

struct HeegaardReduction {
    int g = 1;
    std::uint32_t p = 3;
    ModMatrix inverse_mod_p; // M^-1 mod p with blocks [[E, F], [G, H]]
    ModMatrix b_prime;       // -F H^-1
    IntMatrix X;             // [[Id, B'], [0, Id]]
    IntMatrix Y;             // (X M^-1)^-1 mod p, lifted to [0, p)
    ModMatrix residual;      // X M^-1 Y mod p

    bool residual_identity = false;
    bool b_prime_symmetric = false;
    bool x_symplectic = false;       // over Z
    bool y_symplectic = false;       // over F_p
    bool residual_symplectic = false;
    bool y_lower_left_zero = false;  // preserves span{a}
    bool y_upper_right_zero = false; // preserves span{b}
    std::string x_preserves;         // Lagrangian left invariant by X
    std::string y_preserves;         // Lagrangian left invariant by Y mod p
};

inline std::string preserved_lagrangian(const ModMatrix &m, std::uint32_t p)
{
    const bool lv = is_zero_mod(block_of(m, 1, 0), p);
    const bool lw = is_zero_mod(block_of(m, 0, 1), p);
    if (lv && lw) return "both";
    if (lv) return "L_V";
    if (lw) return "L_W";
    return "none";
}

// The blocks E, F, G, H come from M^-1 mod p; X clears F and Y = (X M^-1)^-1 mod p.
inline HeegaardReduction heegaard_reduce(const IntMatrix &m, std::uint32_t p)
{
    require_odd_prime(p);
    if (!is_symplectic(m)) throw InvalidArgument("heegaard_reduce needs a symplectic integer matrix");
    const int g = m.rows / 2;
    HeegaardReduction out;
    out.g = g;
    out.p = p;
    out.inverse_mod_p = reduce_mod(symplectic_inverse(m), p);
    const ModMatrix F = block_of(out.inverse_mod_p, 0, 1);
    const ModMatrix H = block_of(out.inverse_mod_p, 1, 1);
    const auto Hinv = mod_inverse(H, p);
    if (!Hinv) throw NotQHSAtP("block H of the inverse is singular mod " + std::to_string(p));
    out.b_prime = mod_mul(F, *Hinv, p).scaled(-1);
    out.b_prime = reduce_mod(out.b_prime, p);
    out.b_prime_symmetric = out.b_prime == out.b_prime.transpose();

    out.X = IntMatrix::identity(2 * g);
    for (int r = 0; r < g; ++r)
        for (int c = 0; c < g; ++c) out.X(r, g + c) = out.b_prime(r, c);
    const ModMatrix xm = mod_mul(reduce_mod(out.X, p), out.inverse_mod_p, p);
    const auto y = mod_inverse(xm, p);
    if (!y) throw InvariantViolation("X M^-1 is singular mod p");
    out.Y = lift(*y);
    out.residual = mod_mul(xm, *y, p);

    out.residual_identity = is_identity_mod(out.residual, p);
    out.x_symplectic = is_symplectic(out.X);
    out.y_symplectic = is_symplectic_mod(*y, p);
    out.residual_symplectic = is_symplectic_mod(out.residual, p);
    out.y_lower_left_zero = is_zero_mod(block_of(*y, 1, 0), p);
    out.y_upper_right_zero = is_zero_mod(block_of(*y, 0, 1), p);
    out.x_preserves = preserved_lagrangian(reduce_mod(out.X, p), p);
    out.y_preserves = preserved_lagrangian(*y, p);
    return out;
}

// Random element of Sp_2g(Z) built from shears [[I,S],[0,I]], [[I,0],[S,I]] and
// [[A,0],[0,A^-T]] with S symmetric and A an elementary unimodular matrix.
inline IntMatrix random_symplectic(int g, std::mt19937_64 &rng, int factors = 6)
{
    const int n = 2 * g;
    IntMatrix m = IntMatrix::identity(n);
    for (int f = 0; f < factors; ++f) {
        IntMatrix step = IntMatrix::identity(n);
        const int kind = static_cast<int>(rng() % 3);
        if (kind < 2) {
            for (int i = 0; i < g; ++i)
                for (int j = i; j < g; ++j) {
                    const long long v = static_cast<long long>(rng() % 5) - 2;
                    if (kind == 0) {
                        step(i, g + j) = v;
                        step(j, g + i) = v;
                    } else {
                        step(g + i, j) = v;
                        step(g + j, i) = v;
                    }
                }
        } else if (g > 1) {
            const int i = static_cast<int>(rng() % g);
            int j = static_cast<int>(rng() % (g - 1));
            if (j >= i) ++j;
            const long long v = static_cast<long long>(rng() % 5) - 2;
            // A = Id + v e_ij, A^-T = Id - v e_ji
            step(i, j) = v;
            step(g + j, g + i) = -v;
        }
        m = m * step;
    }
    return m;
}

} // namespace johnsonlab
