#pragma once

// Acceptance criteria as executable checks, shared by the acceptance binary and `johnsonlab selftest`.

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "filtrations.hpp"
#include "groupring.hpp"
#include "johnson.hpp"
#include "lift.hpp"
#include "magnus.hpp"
#include "mapclass.hpp"
#include "sampling.hpp"
#include "symplectic.hpp"

namespace johnsonlab::acceptance {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

namespace detail {

inline std::string join(const std::vector<std::string> &parts, const std::string &sep = "; ")
{
    std::string out;
    for (const auto &p : parts) {
        if (!out.empty()) out += sep;
        out += p;
    }
    return out;
}

// Appends up to `limit` failure notes.
struct Failures {
    std::size_t count = 0;
    std::vector<std::string> notes;
    void add(const std::string &s)
    {
        ++count;
        if (notes.size() < 3) notes.push_back(s);
    }
    std::string summary() const { return std::to_string(count) + " failures" + (notes.empty() ? "" : ": " + join(notes)); }
};

// Compares every Magnus coefficient of degree <= 3 with the augmented iterated Fox derivative,
// walking the derivative tree so each iterated derivative is computed once.
template <class R>
bool bridge_word(const Word &u, Rank rank, R ring, std::string &why, std::size_t &compared)
{
    const int n = rank.n();
    const auto s = magnus_embed(u, 3, n, ring);
    std::function<bool(const GroupRingElement<R> &, std::vector<int> &)> walk =
        [&](const GroupRingElement<R> &e, std::vector<int> &idx) -> bool {
        if (!idx.empty()) {
            // the monomial is the multi-index read backwards
            std::vector<int> mono(idx.rbegin(), idx.rend());
            const auto lhs = s.coefficient(Monomial(mono));
            const auto rhs = augmentation(e);
            ++compared;
            if (!(lhs == rhs)) {
                why = to_string(u) + " at " + to_string(Monomial(mono));
                return false;
            }
        }
        if (idx.size() == 3) return true;
        for (int j = 1; j <= n; ++j) {
            idx.push_back(j);
            const bool ok = walk(fox_derivative(e, j, rank), idx);
            idx.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    std::vector<int> idx;
    if (!ring.is_one(s.coefficient(Monomial()))) {
        why = to_string(u) + " has constant term != 1";
        return false;
    }
    return walk(GroupRingElement<R>::from_word(u, ring), idx);
}

inline Word random_word(std::mt19937_64 &rng, int n, int max_len)
{
    const int len = static_cast<int>(rng() % (max_len + 1));
    std::vector<int> raw;
    for (int i = 0; i < len; ++i) {
        const int idx = 1 + static_cast<int>(rng() % n);
        raw.push_back(rng() % 2 ? idx : -idx);
    }
    return Word::from_signed(raw);
}

} // namespace detail

inline CriterionResult bridge(std::uint64_t seed)
{
    const Rank rank(2);
    std::mt19937_64 rng(seed);
    detail::Failures fz, f3;
    std::size_t compared = 0;
    const int words = 1000;
    for (int t = 0; t < words; ++t) {
        const Word u = detail::random_word(rng, rank.n(), 10);
        std::string why;
        if (!detail::bridge_word(u, rank, IntegerRing{}, why, compared)) fz.add("Z: " + why);
        if (!detail::bridge_word(u, rank, PrimeField(3), why, compared)) f3.add("F_3: " + why);
    }
    CriterionResult r{1, "Fox/Magnus bridge", fz.count == 0 && f3.count == 0, ""};
    r.detail = std::to_string(words) + " words, rank 4, degree <= 3, " + std::to_string(compared) + " coefficients; Z " + fz.summary() + ", F_3 " + f3.summary();
    return r;
}

inline CriterionResult powers_signature(std::uint64_t)
{
    std::vector<std::string> bad;
    const Rank rank(2);
    for (std::uint32_t p : {3u, 5u}) {
        const Word w = power(Word::generator(1), p);
        const std::string P = std::to_string(p);
        if (in_lcs(w, 2, rank)) bad.push_back("in_lcs(x1^" + P + ",2)");
        if (in_stallings(w, 2, p, rank) != Verdict::True) bad.push_back("in_stallings(x1^" + P + ",2)");
        if (in_stallings(w, 3, p, rank) != Verdict::False) bad.push_back("in_stallings(x1^" + P + ",3)");
        if (!in_zassenhaus(w, p, p, rank)) bad.push_back("in_zassenhaus(x1^" + P + "," + P + ")");
        if (in_zassenhaus(w, p + 1, p, rank)) bad.push_back("in_zassenhaus(x1^" + P + "," + std::to_string(p + 1) + ")");
    }
    return {2, "Series signature of powers", bad.empty(),
            bad.empty() ? "p in {3,5}: 5 verdicts each as expected" : "wrong verdicts: " + detail::join(bad)};
}

inline CriterionResult cofinality(std::uint64_t seed)
{
    const Rank rank(2);
    std::size_t bad_sz = 0, bad_zs = 0, n_sz = 0, n_zs = 0;
    std::vector<std::string> notes;
    for (std::uint32_t p : {3u, 5u}) {
        for (int k = 1; k <= 4; ++k) {
            auto rep = cofinality_check(CofinalityDirection::StoZ, k, p, 50, seed + 100 * p + k, rank);
            n_sz += rep.samples;
            bad_sz += rep.counterexamples.size();
            if (!rep.counterexamples.empty())
                notes.push_back("S->Z p=" + std::to_string(p) + " k=" + std::to_string(k) + ": " + to_string(rep.counterexamples[0]));
        }
        for (int l = 1; l <= 3; ++l) {
            const int count = l == 3 ? 16 : 17;
            auto rep = cofinality_check(CofinalityDirection::ZtoS, l, p, count, seed + 1000 * p + l, rank);
            n_zs += rep.samples;
            bad_zs += rep.counterexamples.size();
            if (!rep.counterexamples.empty())
                notes.push_back("Z->S p=" + std::to_string(p) + " l=" + std::to_string(l) + ": " + to_string(rep.counterexamples[0]));
        }
    }
    CriterionResult r{3, "Cofinality", bad_sz == 0 && bad_zs == 0, ""};
    r.detail = "per p in {3,5}: " + std::to_string(n_sz / 2) + " Stallings samples (k<=4) -> Zassenhaus, " +
               std::to_string(n_zs / 2) + " Zassenhaus p^l samples (l<=3) -> Stallings; counterexamples " +
               std::to_string(bad_sz + bad_zs) + (notes.empty() ? "" : " (" + detail::join(notes) + ")");
    return r;
}

inline CriterionResult perron_equivalence(std::uint64_t)
{
    detail::Failures f;
    std::size_t checks = 0;
    for (int g = 1; g <= 3; ++g)
        for (std::uint32_t p : {3u, 5u})
            for (const auto &e : catalog(Rank(g), p))
                for (int k = 1; k <= 3; ++k) {
                    ++checks;
                    const bool a = perron_member(e.automorphism, k, p);
                    const bool b = filtration_member(e.automorphism, SeriesKind::zassenhaus(p), k) == Verdict::True;
                    if (a != b) f.add(e.name + " g=" + std::to_string(g) + " p=" + std::to_string(p) + " k=" + std::to_string(k));
                }
    return {4, "Perron = Zassenhaus", f.count == 0,
            std::to_string(checks) + " (entry, k) checks over g<=3, p in {3,5}; disagreements " + f.summary()};
}

inline bool is_twist_power(const CatalogEntry &e, long long n)
{
    return e.kind == CatalogKind::Power && e.curve_class && (e.exponent == n || e.exponent == -n);
}

inline bool is_bounding_pair_power(const CatalogEntry &e, long long n)
{
    return e.kind == CatalogKind::Power && e.base_kind == CatalogKind::BoundingPair && e.exponent == n;
}

inline CriterionResult tau1_z_image(std::uint64_t)
{
    detail::Failures f;
    std::size_t vanish = 0, members = 0;
    int rank20 = -1, bps20 = 0;
    for (int g = 2; g <= 3; ++g)
        for (std::uint32_t p : {3u, 5u}) {
            const SeriesKind z = SeriesKind::zassenhaus(p);
            std::vector<std::vector<long long>> coords;
            int bps = 0;
            for (const auto &e : catalog(Rank(g), p)) {
                const std::string where = e.name + " g=" + std::to_string(g) + " p=" + std::to_string(p);
                if (e.kind == CatalogKind::TwistSeparating || is_twist_power(e, p)) {
                    ++vanish;
                    if (!tau(e.automorphism, 1, z).is_zero()) f.add("tau1^Z(" + where + ") != 0");
                }
                if (e.kind == CatalogKind::BoundingPair) {
                    ++bps;
                    ++members;
                    const Wedge3Result w = wedge3_membership(tau(e.automorphism, 1, z), p);
                    if (!w.member)
                        f.add(where + " not in wedge^3: " + w.reason);
                    else
                        coords.emplace_back(w.coordinates.begin(), w.coordinates.end());
                }
            }
            if (g == 3 && p == 3) {
                rank20 = mod_rank(coords, p);
                bps20 = bps;
                if (rank20 < std::min(bps, 20)) f.add("span dimension " + std::to_string(rank20) + " < " + std::to_string(std::min(bps, 20)));
            }
        }
    CriterionResult r{5, "tau1^Z image", f.count == 0, ""};
    r.detail = std::to_string(vanish) + " vanishing checks, " + std::to_string(members) + " wedge^3 memberships, g=3 p=3 span " +
               std::to_string(rank20) + " from " + std::to_string(bps20) + " bounding pairs (C(6,3)=20); " + f.summary();
    return r;
}

inline CriterionResult tau1_s_structure(std::uint64_t)
{
    detail::Failures f;
    std::size_t lie = 0, abel = 0, vanish = 0;
    for (int g = 1; g <= 3; ++g)
        for (std::uint32_t p : {3u, 5u})
            for (const auto &e : catalog(Rank(g), p)) {
                if (congruence_level(e.automorphism, p) < 1) continue;
                const std::string where = e.name + " g=" + std::to_string(g) + " p=" + std::to_string(p);
                const Tau1SValue v = tau1_s(e.automorphism, p);
                ++lie;
                if (!is_sp_lie(v.sp_part, p)) f.add("sp_part of " + where + " not in sp");
                if (is_twist_power(e, p)) {
                    ++abel;
                    if (!(reduce_mod(v.sp_part, p) == sp_abel(symplectic_rep(e.automorphism), p)))
                        f.add("sp_part != abel(Psi) for " + where);
                }
                const long long p2 = static_cast<long long>(p) * p;
                if (e.kind == CatalogKind::TwistSeparating || is_bounding_pair_power(e, p) || is_twist_power(e, p2)) {
                    ++vanish;
                    if (!v.is_zero()) f.add("tau1^S(" + where + ") != 0");
                }
            }
    return {6, "tau1^S structure", f.count == 0,
            std::to_string(lie) + " sp checks, " + std::to_string(abel) + " abel(Psi) comparisons, " + std::to_string(vanish) +
                " vanishing checks; " + f.summary()};
}

inline CriterionResult homomorphy_and_kernel(std::uint64_t seed)
{
    detail::Failures f;
    std::mt19937_64 rng(seed);
    int pairs = 0;
    const int per_setting = 25; // 4 settings of (g, p) -> 100 pairs
    for (int g = 2; g <= 3; ++g)
        for (std::uint32_t p : {3u, 5u}) {
            const auto cat = catalog(Rank(g), p);
            std::vector<const CatalogEntry *> torelli, level_p;
            for (const auto &e : cat) {
                if (e.torelli) torelli.push_back(&e);
                if (congruence_level(e.automorphism, p) >= 1) level_p.push_back(&e);
            }
            const SeriesKind z = SeriesKind::zassenhaus(p);
            for (int t = 0; t < per_setting; ++t, ++pairs) {
                const auto &a = *torelli[rng() % torelli.size()];
                const auto &b = *torelli[rng() % torelli.size()];
                const FreeAutomorphism ab = compose(a.automorphism, b.automorphism);
                const std::string where = a.name + "*" + b.name + " g=" + std::to_string(g) + " p=" + std::to_string(p);
                if (!(tau(ab, 1, SeriesKind::lcs()) == tau(a.automorphism, 1, SeriesKind::lcs()) + tau(b.automorphism, 1, SeriesKind::lcs())))
                    f.add("tau1 not additive on " + where);
                const auto &c = *level_p[rng() % level_p.size()];
                const auto &d = *level_p[rng() % level_p.size()];
                const FreeAutomorphism cd = compose(c.automorphism, d.automorphism);
                const std::string where2 = c.name + "*" + d.name + " g=" + std::to_string(g) + " p=" + std::to_string(p);
                if (!(tau(cd, 1, z) == tau(c.automorphism, 1, z) + tau(d.automorphism, 1, z)))
                    f.add("tau1^Z not additive on " + where2);
                if (!(tau1_s(cd, p) == tau1_s(c.automorphism, p) + tau1_s(d.automorphism, p)))
                    f.add("tau1^S not additive on " + where2);
            }
        }
    std::size_t kernel = 0;
    for (int g = 1; g <= 3; ++g)
        for (std::uint32_t p : {3u, 5u})
            for (const auto &e : catalog(Rank(g), p))
                for (const SeriesKind s : {SeriesKind::lcs(), SeriesKind::zassenhaus(p)})
                    for (int k = 1; k <= 2; ++k) {
                        if (filtration_member(e.automorphism, s, k) != Verdict::True) continue;
                        ++kernel;
                        const bool zero = tau(e.automorphism, k, s).is_zero();
                        const bool next = filtration_member(e.automorphism, s, k + 1) == Verdict::True;
                        if (zero != next)
                            f.add("kernel identity fails for " + e.name + " " + s.name() + " k=" + std::to_string(k));
                    }
    return {7, "Johnson homomorphy and kernel", f.count == 0,
            std::to_string(pairs) + " pairs x 3 variants, " + std::to_string(kernel) + " kernel checks; " + f.summary()};
}

inline CriterionResult johnson_range(std::uint64_t seed)
{
    detail::Failures f;
    std::mt19937_64 rng(seed);
    const Rank rank(2);
    int done = 0;
    for (std::uint32_t p : {3u, 5u}) {
        const SeriesKind z = SeriesKind::zassenhaus(p);
        // level of each catalog entry, capped at 4
        std::vector<std::pair<const CatalogEntry *, int>> leveled;
        const auto cat = catalog(rank, p);
        for (const auto &e : cat) {
            int level = 0;
            while (level < 4 && filtration_member(e.automorphism, z, level + 1) == Verdict::True) ++level;
            if (level >= 1) leveled.emplace_back(&e, level);
        }
        SeriesSampler sampler(rank, seed + p);
        for (int t = 0; t < 25; ++t, ++done) {
            const auto [e, level] = leveled[rng() % leveled.size()];
            const int k = 1 + static_cast<int>(rng() % std::min(level, 4));
            const int l = 1 + static_cast<int>(rng() % (5 - k));
            const Word u = sampler.zassenhaus(l, p);
            const Word w = e->automorphism.apply(u) * invert(u);
            if (!in_zassenhaus(w, k + l, p, rank))
                f.add(e->name + " (k=" + std::to_string(k) + ") on " + to_string(u) + " (l=" + std::to_string(l) + ")");
        }
    }
    return {8, "JohnsonRange lemma", f.count == 0, std::to_string(done) + " (f, u) pairs with k+l <= 5; " + f.summary()};
}

inline CriterionResult heegaard(std::uint64_t seed)
{
    std::size_t total = 0, residual = 0, sym_b = 0, symplectic = 0, lower_left = 0, upper_right = 0, singular_ok = 0,
                singular = 0;
    for (int g = 2; g <= 3; ++g)
        for (std::uint32_t p : {3u, 5u}) {
            std::mt19937_64 rng(seed + 17 * g + p);
            int made = 0;
            while (made < 100) {
                IntMatrix m = random_symplectic(g, rng);
                if (rng() % 2) m = m * gen_M(1 + static_cast<int>(rng() % g), 1 + static_cast<int>(rng() % g), p, g);
                if (rng() % 2) m = m * gen_N(1 + static_cast<int>(rng() % g), 1 + static_cast<int>(rng() % g), p, g);
                HeegaardReduction h;
                try {
                    h = heegaard_reduce(m, p);
                } catch (const NotQHSAtP &) {
                    continue; // resample until H is invertible
                }
                ++made;
                ++total;
                residual += h.residual_identity;
                sym_b += h.b_prime_symmetric;
                symplectic += h.x_symplectic && h.y_symplectic && h.residual_symplectic;
                lower_left += h.y_lower_left_zero;
                upper_right += h.y_upper_right_zero;
            }
            // Omega has H = 0 in its inverse.
            ++singular;
            try {
                heegaard_reduce(omega(g), p);
            } catch (const NotQHSAtP &) {
                ++singular_ok;
            }
        }
    const bool pass = residual == total && sym_b == total && symplectic == total && lower_left == total &&
                      singular_ok == singular;
    std::ostringstream d;
    d << total << " matrices over (g,p) in {2,3}x{3,5}: residual=Id " << residual << "/" << total << ", B' symmetric " << sym_b
      << "/" << total << ", factors symplectic " << symplectic << "/" << total << ", Y lower-left=0 " << lower_left << "/"
      << total << " (Y upper-right=0 " << upper_right << "/" << total << "), singular H rejected " << singular_ok << "/"
      << singular;
    return {9, "Heegaard reduction", pass, d.str()};
}

inline CriterionResult catalog_integrity(std::uint64_t)
{
    detail::Failures f;
    std::size_t entries = 0, lifts = 0;
    for (int g = 1; g <= 3; ++g)
        for (std::uint32_t p : {3u, 5u}) {
            for (const auto &e : catalog(Rank(g), p)) {
                ++entries;
                const EntryCheck c = check_entry(e);
                if (!c.ok()) f.add(e.name + " g=" + std::to_string(g));
            }
            for (int i = 1; i <= g; ++i)
                for (int j = 1; j <= g; ++j) {
                    ++lifts;
                    const LiftReport r = lift_generator_check(i, j, p, Rank(g));
                    if (!r.ok()) f.add("lift " + detail::join(r.mismatches, ",") + " g=" + std::to_string(g) + " p=" + std::to_string(p));
                }
        }
    return {10, "Catalog integrity", f.count == 0,
            std::to_string(entries) + " entries (inverse, boundary, homology), " + std::to_string(lifts) + " lift checks; " + f.summary()};
}

using CriterionFn = CriterionResult (*)(std::uint64_t);

inline const std::vector<CriterionFn> &criteria()
{
    static const std::vector<CriterionFn> all = {bridge,         powers_signature, cofinality,           perron_equivalence,
                                                 tau1_z_image,   tau1_s_structure, homomorphy_and_kernel, johnson_range,
                                                 heegaard,       catalog_integrity};
    return all;
}

// Runs the selected criteria (all when `which` is empty). Exceptions count as failures.
inline std::vector<CriterionResult> run(std::uint64_t seed, const std::set<int> &which = {})
{
    std::vector<CriterionResult> out;
    const auto &all = criteria();
    for (std::size_t i = 0; i < all.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!which.empty() && !which.count(id)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        CriterionResult r;
        try {
            r = all[i](seed);
        } catch (const std::exception &e) {
            r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()};
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(r);
    }
    return out;
}

inline std::string format_line(const CriterionResult &r)
{
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title << " (" << r.seconds << "s): " << r.detail;
    return os.str();
}

} // namespace johnsonlab::acceptance
