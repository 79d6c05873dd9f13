#pragma once

#include <map>
#include <string>
#include <vector>

#include "coeff.hpp"
#include "freegroup.hpp"

namespace johnsonlab {

// Finite formal sum of reduced words with nonzero coefficients in R.
template <class R>
class GroupRingElement {
public:
    using value_type = typename R::value_type;
    using map_type = std::map<Word, value_type>;

    explicit GroupRingElement(R ring = R{}) : ring_(ring) {}

    static GroupRingElement from_word(const Word &w, R ring = R{})
    {
        GroupRingElement e(ring);
        e.add_term(w, ring.one());
        return e;
    }

    static GroupRingElement constant(const value_type &c, R ring = R{})
    {
        GroupRingElement e(ring);
        e.add_term(Word{}, c);
        return e;
    }

    const R &ring() const { return ring_; }
    const map_type &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    value_type coeff(const Word &w) const
    {
        auto it = terms_.find(w);
        return it == terms_.end() ? ring_.zero() : it->second;
    }

    void add_term(const Word &w, const value_type &c)
    {
        if (ring_.is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            ring_.add_to(it->second, c);
            if (ring_.is_zero(it->second)) terms_.erase(it);
        }
    }

    GroupRingElement &operator+=(const GroupRingElement &o)
    {
        check(o);
        for (const auto &[w, c] : o.terms_) add_term(w, c);
        return *this;
    }

    GroupRingElement &operator-=(const GroupRingElement &o)
    {
        check(o);
        for (const auto &[w, c] : o.terms_) add_term(w, ring_.neg(c));
        return *this;
    }

    GroupRingElement scaled(const value_type &s) const
    {
        GroupRingElement out(ring_);
        for (const auto &[w, c] : terms_) out.add_term(w, ring_.mul(s, c));
        return out;
    }

    GroupRingElement operator-() const { return scaled(ring_.neg(ring_.one())); }

    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement &b) { return a += b; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement &b) { return a -= b; }

    friend GroupRingElement operator*(const GroupRingElement &a, const GroupRingElement &b)
    {
        a.check(b);
        GroupRingElement out(a.ring_);
        for (const auto &[u, cu] : a.terms_)
            for (const auto &[v, cv] : b.terms_) out.add_term(u * v, a.ring_.mul(cu, cv));
        return out;
    }

    friend bool operator==(const GroupRingElement &a, const GroupRingElement &b)
    {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }

private:
    void check(const GroupRingElement &o) const
    {
        if (!(ring_ == o.ring_)) throw Incompatible("group ring elements over different rings");
    }

    R ring_;
    map_type terms_;
};

using IntegralGroupRing = GroupRingElement<IntegerRing>;

template <class R>
typename R::value_type augmentation(const GroupRingElement<R> &e)
{
    auto s = e.ring().zero();
    for (const auto &[w, c] : e.terms()) e.ring().add_to(s, c);
    return s;
}

template <class R>
GroupRingElement<R> bar(const GroupRingElement<R> &e)
{
    GroupRingElement<R> out(e.ring());
    for (const auto &[w, c] : e.terms()) out.add_term(invert(w), c);
    return out;
}

// Applies a word-to-word map termwise (used for automorphisms acting on the group ring).
template <class R, class F>
GroupRingElement<R> map_words(const GroupRingElement<R> &e, F &&f)
{
    GroupRingElement<R> out(e.ring());
    for (const auto &[w, c] : e.terms()) out.add_term(f(w), c);
    return out;
}

// Reduction of coefficients into another ring.
template <class To, class From>
GroupRingElement<To> change_ring(const GroupRingElement<From> &e, To ring)
{
    GroupRingElement<To> out(ring);
    for (const auto &[w, c] : e.terms()) out.add_term(w, ring.from_integer(e.ring().to_integer(c)));
    return out;
}

struct MultiIndex {
    std::vector<int> indices; // (i_1, ..., i_l); d/dx_{i_1} is applied first

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> idx) : indices(std::move(idx))
    {
        if (indices.empty()) throw InvalidArgument("multi-index must have order at least 1");
    }
    std::size_t order() const { return indices.size(); }
};

inline void check_generator(int j, Rank rank)
{
    if (!rank.contains(j))
        throw InvalidGenerator("generator index " + std::to_string(j) + " outside 1.." +
                               std::to_string(rank.n()));
}

// Left Fox derivative of a word: x_j at position t contributes +prefix,
// x_j^-1 contributes -(prefix including the letter).
template <class R = IntegerRing>
GroupRingElement<R> fox_derivative(const Word &w, int j, Rank rank, R ring = R{})
{
    check_generator(j, rank);
    check_rank(w, rank);
    GroupRingElement<R> out(ring);
    const auto &s = w.letters();
    std::vector<int> prefix;
    prefix.reserve(s.size());
    for (int a : s) {
        if (a == j) {
            out.add_term(Word::from_signed(prefix), ring.one());
        } else if (a == -j) {
            prefix.push_back(a);
            out.add_term(Word::from_signed(prefix), ring.neg(ring.one()));
            continue;
        }
        prefix.push_back(a);
    }
    return out;
}

template <class R>
GroupRingElement<R> fox_derivative(const GroupRingElement<R> &e, int j, Rank rank)
{
    GroupRingElement<R> out(e.ring());
    for (const auto &[w, c] : e.terms()) out += fox_derivative(w, j, rank, e.ring()).scaled(c);
    return out;
}

template <class R>
GroupRingElement<R> higher_fox_derivative(const GroupRingElement<R> &e, const MultiIndex &m, Rank rank)
{
    if (m.indices.empty()) throw InvalidArgument("multi-index must have order at least 1");
    GroupRingElement<R> cur = e;
    for (int j : m.indices) cur = fox_derivative(cur, j, rank);
    return cur;
}

// Augmentation followed by reduction mod p.
template <class R>
std::uint32_t eval_mod(const GroupRingElement<R> &e, std::uint32_t p)
{
    require_odd_prime(p);
    return residue(e.ring().to_integer(augmentation(e)), p);
}

template <class R>
std::string to_string(const GroupRingElement<R> &e)
{
    if (e.is_zero()) return "0";
    std::string out;
    for (const auto &[w, c] : e.terms()) {
        if (!out.empty()) out += " + ";
        out += e.ring().format(c) + "*(" + (w.empty() ? std::string("1") : to_string(w)) + ")";
    }
    return out;
}

} // namespace johnsonlab
