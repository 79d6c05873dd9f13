#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace johnsonlab {

// Genus of the surface; the free group has n = 2g generators x1..x2g.
struct Rank {
    int g = 1;

    Rank() = default;
    explicit Rank(int genus) : g(genus)
    {
        if (genus < 1) throw InvalidArgument("genus must be positive, got " + std::to_string(genus));
    }
    int n() const { return 2 * g; }
    bool contains(int index) const { return index >= 1 && index <= n(); }
    friend bool operator==(const Rank &, const Rank &) = default;
};

struct Letter {
    int index = 1; // 1..2g
    int sign = 1;  // +1 or -1

    int encoded() const { return sign * index; }
    friend bool operator==(const Letter &, const Letter &) = default;
};

// Freely reduced word. Letters are stored as signed indices: +i is x_i, -i is x_i^-1.
class Word {
public:
    Word() = default;

    // Reduces an arbitrary signed-letter sequence. Zero entries are rejected.
    static Word from_signed(const std::vector<int> &raw)
    {
        Word w;
        w.s_.reserve(raw.size());
        for (int a : raw) {
            if (a == 0) throw InvalidGenerator("letter index 0");
            w.push(a);
        }
        return w;
    }

    static Word generator(int index, int sign = 1)
    {
        if (index < 1) throw InvalidGenerator("generator index " + std::to_string(index));
        Word w;
        w.s_.push_back(sign > 0 ? index : -index);
        return w;
    }

    const std::vector<int> &letters() const { return s_; }
    std::size_t size() const { return s_.size(); }
    bool empty() const { return s_.empty(); }
    int operator[](std::size_t i) const { return s_[i]; }

    std::vector<Letter> as_letters() const
    {
        std::vector<Letter> out;
        out.reserve(s_.size());
        for (int a : s_) out.push_back({std::abs(a), a > 0 ? 1 : -1});
        return out;
    }

    int max_index() const
    {
        int m = 0;
        for (int a : s_) m = std::max(m, std::abs(a));
        return m;
    }

    // Appends one letter, cancelling against the last one when possible.
    void push(int a)
    {
        if (!s_.empty() && s_.back() == -a)
            s_.pop_back();
        else
            s_.push_back(a);
    }

    friend bool operator==(const Word &, const Word &) = default;
    friend bool operator<(const Word &a, const Word &b)
    {
        if (a.s_.size() != b.s_.size()) return a.s_.size() < b.s_.size();
        return a.s_ < b.s_;
    }

private:
    std::vector<int> s_;
};

inline void check_rank(const Word &w, Rank rank)
{
    if (w.max_index() > rank.n())
        throw InvalidGenerator("word uses x" + std::to_string(w.max_index()) + " but rank has " +
                               std::to_string(rank.n()) + " generators");
}

inline Word reduce(const std::vector<Letter> &letters, Rank rank)
{
    std::vector<int> raw;
    raw.reserve(letters.size());
    for (const Letter &l : letters) {
        if (!rank.contains(l.index))
            throw InvalidGenerator("generator index " + std::to_string(l.index) + " outside 1.." +
                                   std::to_string(rank.n()));
        if (l.sign != 1 && l.sign != -1)
            throw InvalidGenerator("letter sign must be +1 or -1");
        raw.push_back(l.encoded());
    }
    return Word::from_signed(raw);
}

inline Word multiply(const Word &u, const Word &v)
{
    Word w = u;
    for (int a : v.letters()) w.push(a);
    return w;
}

inline Word operator*(const Word &u, const Word &v) { return multiply(u, v); }

inline Word invert(const Word &u)
{
    std::vector<int> raw(u.letters().rbegin(), u.letters().rend());
    for (int &a : raw) a = -a;
    return Word::from_signed(raw);
}

inline Word power(const Word &u, long long n)
{
    const Word base = n < 0 ? invert(u) : u;
    Word w;
    for (long long k = 0; k < (n < 0 ? -n : n); ++k) w = w * base;
    return w;
}

inline Word commutator(const Word &u, const Word &v) { return u * v * invert(u) * invert(v); }

// c u c^-1
inline Word conjugate(const Word &u, const Word &c) { return c * u * invert(c); }

inline std::vector<long long> exponent_vector(const Word &u, Rank rank)
{
    check_rank(u, rank);
    std::vector<long long> v(rank.n(), 0);
    for (int a : u.letters()) v[std::abs(a) - 1] += a > 0 ? 1 : -1;
    return v;
}

// Product of [x_{2i-1}, x_{2i}] for i = 1..h.
inline Word separating_curve(int h)
{
    Word c;
    for (int i = 1; i <= h; ++i)
        c = c * commutator(Word::generator(2 * i - 1), Word::generator(2 * i));
    return c;
}

inline Word boundary_word(Rank rank) { return separating_curve(rank.g); }

inline std::string to_string(const Word &u)
{
    std::string out;
    for (int a : u.letters()) {
        if (!out.empty()) out += ' ';
        out += a > 0 ? 'x' : 'X';
        out += std::to_string(std::abs(a));
    }
    return out;
}

inline std::ostream &operator<<(std::ostream &os, const Word &u)
{
    return os << (u.empty() ? std::string("1") : to_string(u));
}

// Accepts whitespace-separated tokens x<i>, X<i>, x<i>^-1 (and "1" for the identity).
// A rank of zero skips the range check.
inline Word parse_word(std::string_view text, int genus = 0)
{
    std::istringstream in{std::string(text)};
    std::string tok;
    std::vector<int> raw;
    while (in >> tok) {
        if (tok == "1") continue;
        int sign = 1;
        std::string body = tok;
        if (body.size() > 3 && body.compare(body.size() - 3, 3, "^-1") == 0) {
            sign = -sign;
            body.resize(body.size() - 3);
        }
        if (body.size() < 2 || (body[0] != 'x' && body[0] != 'X'))
            throw ParseError("bad word token '" + tok + "'");
        if (body[0] == 'X') sign = -sign;
        int index = 0;
        for (std::size_t i = 1; i < body.size(); ++i) {
            if (body[i] < '0' || body[i] > '9' || index > 100000)
                throw ParseError("bad word token '" + tok + "'");
            index = index * 10 + (body[i] - '0');
        }
        if (index < 1) throw ParseError("bad generator index in '" + tok + "'");
        if (genus > 0 && index > 2 * genus)
            throw InvalidGenerator("generator x" + std::to_string(index) + " outside rank " +
                                   std::to_string(2 * genus));
        raw.push_back(sign * index);
    }
    return Word::from_signed(raw);
}

} // namespace johnsonlab

template <>
struct std::hash<johnsonlab::Word> {
    std::size_t operator()(const johnsonlab::Word &w) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        for (int a : w.letters()) h = (h ^ static_cast<std::size_t>(a + 1000003)) * 1099511628211ull;
        return h;
    }
};
