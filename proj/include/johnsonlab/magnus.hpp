#pragma once

#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coeff.hpp"
#include "freegroup.hpp"
#include "groupring.hpp"

namespace johnsonlab {

// Cap on the total number of stored monomials in one series (sum of n^d for d <= D).
struct Budget {
    std::size_t max_monomials = default_limit();

    static std::size_t default_limit()
    {
        static const std::size_t limit = [] {
            if (const char *env = std::getenv("JOHNSONLAB_BUDGET")) {
                char *end = nullptr;
                unsigned long long v = std::strtoull(env, &end, 10);
                if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
            }
            return static_cast<std::size_t>(2'000'000);
        }();
        return limit;
    }

    static Budget unlimited() { return Budget{std::numeric_limits<std::size_t>::max()}; }
};

inline std::size_t ipow(std::size_t base, int e)
{
    std::size_t r = 1;
    while (e-- > 0) r *= base;
    return r;
}

inline std::size_t monomial_count(int n, int D)
{
    std::size_t total = 0, layer = 1;
    for (int d = 0; d <= D; ++d) {
        total += layer;
        if (total > (std::size_t(1) << 40)) return total;
        layer *= static_cast<std::size_t>(n);
    }
    return total;
}

inline void check_budget(int n, int D, const Budget &budget)
{
    std::size_t need = monomial_count(n, D);
    if (need > budget.max_monomials)
        throw BudgetExceeded("truncation " + std::to_string(D) + " in " + std::to_string(n) +
                             " variables needs " + std::to_string(need) + " monomials, budget is " +
                             std::to_string(budget.max_monomials));
}

// A word in the variables w_1..w_n; empty means the constant term.
struct Monomial {
    std::vector<int> vars;

    Monomial() = default;
    explicit Monomial(std::vector<int> v) : vars(std::move(v)) {}
    int degree() const { return static_cast<int>(vars.size()); }

    // Position inside the dense degree table; the first variable is most significant.
    std::size_t index(int n) const
    {
        std::size_t idx = 0;
        for (int v : vars) {
            if (v < 1 || v > n) throw InvalidGenerator("monomial variable w" + std::to_string(v));
            idx = idx * n + (v - 1);
        }
        return idx;
    }

    static Monomial from_index(std::size_t idx, int degree, int n)
    {
        std::vector<int> v(degree);
        for (int k = degree - 1; k >= 0; --k) {
            v[k] = static_cast<int>(idx % n) + 1;
            idx /= n;
        }
        return Monomial(std::move(v));
    }

    friend bool operator==(const Monomial &, const Monomial &) = default;
};

inline std::string to_string(const Monomial &m)
{
    if (m.vars.empty()) return "1";
    std::string out;
    for (int v : m.vars) out += "w" + std::to_string(v);
    return out;
}

// Noncommutative polynomial in w_1..w_n truncated above degree D, stored densely per degree.
template <class R>
class TruncatedSeries {
public:
    using value_type = typename R::value_type;

    TruncatedSeries(R ring, int n, int D, const Budget &budget = Budget{}) : ring_(ring), n_(n), D_(D)
    {
        if (n < 1) throw InvalidArgument("series needs at least one variable");
        if (D < 0) throw InvalidArgument("truncation must be nonnegative");
        check_budget(n, D, budget);
        deg_.resize(D + 1);
        for (int d = 0; d <= D; ++d) deg_[d].assign(ipow(n, d), ring.zero());
    }

    static TruncatedSeries one(R ring, int n, int D, const Budget &budget = Budget{})
    {
        TruncatedSeries s(ring, n, D, budget);
        s.deg_[0][0] = ring.one();
        return s;
    }

    const R &ring() const { return ring_; }
    int variables() const { return n_; }
    int truncation() const { return D_; }

    const std::vector<value_type> &part(int d) const { return deg_.at(d); }
    std::vector<value_type> &part(int d) { return deg_.at(d); }

    value_type coefficient(const Monomial &m) const
    {
        if (m.degree() > D_)
            throw OutOfRange("monomial degree " + std::to_string(m.degree()) + " exceeds truncation " +
                             std::to_string(D_));
        return deg_[m.degree()][m.index(n_)];
    }

    void set(const Monomial &m, const value_type &c)
    {
        if (m.degree() > D_) throw OutOfRange("monomial degree exceeds truncation");
        deg_[m.degree()][m.index(n_)] = c;
    }

    // Multiplies on the right by 1 + w_i (sign > 0) or by its inverse (sign < 0).
    void right_mul_generator(int letter)
    {
        const int i = std::abs(letter) - 1;
        if (i >= n_) throw InvalidGenerator("generator x" + std::to_string(i + 1) + " outside series");
        if (letter > 0) {
            for (int d = D_; d >= 1; --d) {
                auto &hi = deg_[d];
                const auto &lo = deg_[d - 1];
                for (std::size_t m = 0; m < lo.size(); ++m)
                    if (!ring_.is_zero(lo[m])) ring_.add_to(hi[m * n_ + i], lo[m]);
            }
        } else {
            for (int d = 1; d <= D_; ++d) {
                auto &hi = deg_[d];
                const auto &lo = deg_[d - 1];
                for (std::size_t m = 0; m < lo.size(); ++m)
                    if (!ring_.is_zero(lo[m])) ring_.sub_from(hi[m * n_ + i], lo[m]);
            }
        }
    }

    // Nonzero terms in degree order, then monomial order.
    std::vector<std::pair<Monomial, value_type>> terms() const
    {
        std::vector<std::pair<Monomial, value_type>> out;
        for (int d = 0; d <= D_; ++d)
            for (std::size_t m = 0; m < deg_[d].size(); ++m)
                if (!ring_.is_zero(deg_[d][m])) out.emplace_back(Monomial::from_index(m, d, n_), deg_[d][m]);
        return out;
    }

    // Lowest degree >= 1 carrying a nonzero coefficient, with the first such monomial.
    std::optional<std::pair<int, Monomial>> lowest_nonconstant() const
    {
        for (int d = 1; d <= D_; ++d)
            for (std::size_t m = 0; m < deg_[d].size(); ++m)
                if (!ring_.is_zero(deg_[d][m])) return std::make_pair(d, Monomial::from_index(m, d, n_));
        return std::nullopt;
    }

    bool part_is_zero(int d) const
    {
        for (const auto &c : deg_.at(d))
            if (!ring_.is_zero(c)) return false;
        return true;
    }

    friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        return a.ring_ == b.ring_ && a.n_ == b.n_ && a.D_ == b.D_ && a.deg_ == b.deg_;
    }

    TruncatedSeries &operator+=(const TruncatedSeries &o)
    {
        check_compatible(o);
        for (int d = 0; d <= D_; ++d)
            for (std::size_t m = 0; m < deg_[d].size(); ++m) ring_.add_to(deg_[d][m], o.deg_[d][m]);
        return *this;
    }

    TruncatedSeries &operator-=(const TruncatedSeries &o)
    {
        check_compatible(o);
        for (int d = 0; d <= D_; ++d)
            for (std::size_t m = 0; m < deg_[d].size(); ++m) ring_.sub_from(deg_[d][m], o.deg_[d][m]);
        return *this;
    }

    void scale(const value_type &s)
    {
        for (auto &layer : deg_)
            for (auto &c : layer) c = ring_.mul(s, c);
    }

    void check_compatible(const TruncatedSeries &o) const
    {
        if (!(ring_ == o.ring_)) throw Incompatible("series over different coefficient rings");
        if (n_ != o.n_) throw Incompatible("series in different numbers of variables");
        if (D_ != o.D_) throw Incompatible("series with different truncations");
    }

private:
    R ring_;
    int n_;
    int D_;
    std::vector<std::vector<value_type>> deg_;
};

template <class R>
TruncatedSeries<R> series_mul(const TruncatedSeries<R> &a, const TruncatedSeries<R> &b)
{
    a.check_compatible(b);
    const int n = a.variables(), D = a.truncation();
    const R &ring = a.ring();
    TruncatedSeries<R> c(ring, n, D, Budget::unlimited());
    for (int d = 0; d <= D; ++d) {
        auto &out = c.part(d);
        for (int e = 0; e <= d; ++e) {
            const auto &pa = a.part(e);
            const auto &pb = b.part(d - e);
            const std::size_t shift = pb.size();
            for (std::size_t ia = 0; ia < pa.size(); ++ia) {
                if (ring.is_zero(pa[ia])) continue;
                for (std::size_t ib = 0; ib < shift; ++ib)
                    if (!ring.is_zero(pb[ib])) ring.fma(out[ia * shift + ib], pa[ia], pb[ib]);
            }
        }
    }
    return c;
}

template <class R>
TruncatedSeries<R> operator*(const TruncatedSeries<R> &a, const TruncatedSeries<R> &b)
{
    return series_mul(a, b);
}

// Inverse of a series with constant term 1: b_0 = 1, b_d = -sum_{e>=1} a_e b_{d-e}.
template <class R>
TruncatedSeries<R> series_inverse(const TruncatedSeries<R> &a)
{
    const R &ring = a.ring();
    if (!ring.is_one(a.part(0)[0])) throw NotAUnit("series constant term is not 1");
    const int n = a.variables(), D = a.truncation();
    TruncatedSeries<R> b = TruncatedSeries<R>::one(ring, n, D, Budget::unlimited());
    for (int d = 1; d <= D; ++d) {
        auto &out = b.part(d);
        for (int e = 1; e <= d; ++e) {
            const auto &pa = a.part(e);
            const auto &pb = b.part(d - e);
            const std::size_t shift = pb.size();
            for (std::size_t ia = 0; ia < pa.size(); ++ia) {
                if (ring.is_zero(pa[ia])) continue;
                for (std::size_t ib = 0; ib < shift; ++ib)
                    if (!ring.is_zero(pb[ib])) ring.fma(out[ia * shift + ib], pa[ia], pb[ib]);
            }
        }
        for (auto &c : out) c = ring.neg(c);
    }
    return b;
}

// Magnus embedding x_i -> 1 + w_i, truncated at degree D, in n variables.
template <class R = IntegerRing>
TruncatedSeries<R> magnus_embed(const Word &u, int D, int n, R ring = R{}, const Budget &budget = Budget{})
{
    if (D < 1) throw InvalidArgument("truncation must be at least 1");
    if (u.max_index() > n) throw InvalidGenerator("word uses a generator outside the series variables");
    auto s = TruncatedSeries<R>::one(ring, n, D, budget);
    for (int a : u.letters()) s.right_mul_generator(a);
    return s;
}

template <class R = IntegerRing>
TruncatedSeries<R> magnus_embed(const Word &u, int D, Rank rank, R ring = R{}, const Budget &budget = Budget{})
{
    check_rank(u, rank);
    return magnus_embed(u, D, rank.n(), ring, budget);
}

template <class R>
TruncatedSeries<R> magnus_embed(const GroupRingElement<R> &e, int D, int n, const Budget &budget = Budget{})
{
    TruncatedSeries<R> s(e.ring(), n, D, budget);
    for (const auto &[w, c] : e.terms()) {
        auto t = magnus_embed(w, D, n, e.ring(), budget);
        t.scale(c);
        s += t;
    }
    return s;
}

template <class R>
typename R::value_type coefficient(const TruncatedSeries<R> &s, const Monomial &m)
{
    return s.coefficient(m);
}

// Reduces an integer series coefficientwise into F_p.
inline TruncatedSeries<PrimeField> reduce_mod(const TruncatedSeries<IntegerRing> &s, PrimeField field)
{
    TruncatedSeries<PrimeField> out(field, s.variables(), s.truncation(), Budget::unlimited());
    for (int d = 0; d <= s.truncation(); ++d) {
        const auto &src = s.part(d);
        auto &dst = out.part(d);
        for (std::size_t m = 0; m < src.size(); ++m) dst[m] = residue(src[m], field.p);
    }
    return out;
}

// Lowest degree of Mag(u) - 1 up to D; `degree` is empty when the valuation exceeds D.
struct Valuation {
    std::optional<int> degree;
    Monomial witness;
    int truncation = 0;

    bool exceeds_truncation() const { return !degree.has_value(); }
    bool at_least(int k) const { return !degree || *degree >= k; }
};

template <class R>
Valuation valuation(const TruncatedSeries<R> &s)
{
    Valuation v;
    v.truncation = s.truncation();
    if (auto low = s.lowest_nonconstant()) {
        v.degree = low->first;
        v.witness = low->second;
    }
    return v;
}

template <class R = IntegerRing>
Valuation valuation(const Word &u, int D, int n, R ring = R{}, const Budget &budget = Budget{})
{
    return valuation(magnus_embed(u, D, n, ring, budget));
}

} // namespace johnsonlab
