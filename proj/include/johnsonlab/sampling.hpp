#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "coeff.hpp"
#include "freegroup.hpp"

namespace johnsonlab {

struct SeriesKind {
    enum class Kind { LCS, Stallings, Zassenhaus };
    Kind kind = Kind::LCS;
    std::uint32_t p = 0; // unused for LCS

    static SeriesKind lcs() { return {}; }
    static SeriesKind stallings(std::uint32_t p)
    {
        require_odd_prime(p);
        return {Kind::Stallings, p};
    }
    static SeriesKind zassenhaus(std::uint32_t p)
    {
        require_odd_prime(p);
        return {Kind::Zassenhaus, p};
    }
    std::string name() const
    {
        switch (kind) {
        case Kind::LCS: return "lcs";
        case Kind::Stallings: return "stallings";
        default: return "zassenhaus";
        }
    }
    friend bool operator==(const SeriesKind &, const SeriesKind &) = default;
};

inline SeriesKind parse_series(const std::string &name, std::uint32_t p)
{
    if (name == "lcs") return SeriesKind::lcs();
    if (name == "stallings") return SeriesKind::stallings(p);
    if (name == "zassenhaus") return SeriesKind::zassenhaus(p);
    throw ParseError("unknown series '" + name + "' (expected lcs, stallings or zassenhaus)");
}

// Builds elements of a series term bottom-up from short random words.
class SeriesSampler {
public:
    SeriesSampler(Rank rank, std::uint64_t seed, int word_cap = 6)
        : rank_(rank), rng_(seed), cap_(word_cap < 1 ? 1 : word_cap)
    {
    }

    std::uint64_t below(std::uint64_t n) { return rng_() % n; }

    Word random_word(int max_len)
    {
        for (;;) {
            const int len = 1 + static_cast<int>(below(static_cast<std::uint64_t>(max_len)));
            std::vector<int> raw(len);
            for (int &a : raw) {
                const int idx = 1 + static_cast<int>(below(static_cast<std::uint64_t>(rank_.n())));
                a = below(2) ? idx : -idx;
            }
            Word w = Word::from_signed(raw);
            if (!w.empty()) return w;
        }
    }

    Word random_word() { return random_word(cap_); }

    // Element of the k-th lower central series term.
    Word lcs(int k)
    {
        return nontrivial([&] { return conjugate_product([&] { return lcs_core(k); }); });
    }

    Word stallings(int k, std::uint32_t p)
    {
        return nontrivial([&] { return conjugate_product([&] { return stallings_core(k, p); }); });
    }

    // Element of the k-th Zassenhaus term: a p^j-th power of an element of the i-th
    // lower central term with i p^j >= k, keeping i <= 3.
    Word zassenhaus(int k, std::uint32_t p)
    {
        return nontrivial([&] { return conjugate_product([&] { return zassenhaus_core(k, p); }); });
    }

    Word sample(SeriesKind s, int k)
    {
        switch (s.kind) {
        case SeriesKind::Kind::LCS: return lcs(k);
        case SeriesKind::Kind::Stallings: return stallings(k, s.p);
        default: return zassenhaus(k, s.p);
        }
    }

private:
    template <class F>
    Word nontrivial(F &&make)
    {
        Word w;
        for (int attempt = 0; attempt < 32; ++attempt) {
            w = make();
            if (!w.empty()) break;
        }
        return w;
    }

    // Product of one or two conjugates of independently drawn core elements.
    template <class F>
    Word conjugate_product(F &&core)
    {
        const int factors = 1 + static_cast<int>(below(2));
        Word out;
        for (int f = 0; f < factors; ++f) {
            Word c = below(2) ? random_word(2) : Word{};
            Word s = core();
            if (below(2)) s = invert(s);
            out = out * conjugate(s, c);
        }
        return out;
    }

    Word lcs_core(int k)
    {
        if (k <= 1) return random_word();
        return commutator(random_word(std::min(cap_, 3)), lcs_core(k - 1));
    }

    Word stallings_core(int k, std::uint32_t p)
    {
        if (k <= 1) return random_word();
        if (below(2)) return commutator(random_word(std::min(cap_, 3)), stallings_core(k - 1, p));
        return power(stallings_core(k - 1, p), p);
    }

    Word zassenhaus_core(int k, std::uint32_t p)
    {
        std::vector<std::pair<int, long long>> choices; // (i, p^j)
        long long pj = 1;
        for (;;) {
            const int i = static_cast<int>((k + pj - 1) / pj);
            if (i <= 3) choices.emplace_back(i < 1 ? 1 : i, pj);
            if (i <= 1) break;
            pj *= p;
        }
        const auto [i, e] = choices[below(choices.size())];
        return power(lcs_core(i), e);
    }

    Rank rank_;
    std::mt19937_64 rng_;
    int cap_;
};

inline std::vector<Word> sample_series(SeriesKind series, int k, int count, std::uint64_t seed, Rank rank,
                                       int word_cap = 6)
{
    if (k < 1) throw InvalidArgument("depth must be at least 1");
    if (count < 1) throw InvalidArgument("sample count must be at least 1");
    SeriesSampler sampler(rank, seed, word_cap);
    std::vector<Word> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(sampler.sample(series, k));
    return out;
}

} // namespace johnsonlab
