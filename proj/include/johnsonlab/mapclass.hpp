#pragma once

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "coeff.hpp"
#include "freegroup.hpp"
#include "symplectic.hpp"

namespace johnsonlab {

// A mapping class given by generator images f(x_i) and stored inverse images f^-1(x_i).
class FreeAutomorphism {
public:
    FreeAutomorphism() = default;

    FreeAutomorphism(Rank rank, std::vector<Word> images, std::vector<Word> inverse_images, std::string label)
        : rank_(rank), images_(std::move(images)), inverse_images_(std::move(inverse_images)),
          label_(std::move(label))
    {
        if (images_.size() != static_cast<std::size_t>(rank.n()) ||
            inverse_images_.size() != static_cast<std::size_t>(rank.n()))
            throw Incompatible("automorphism needs exactly 2g images and 2g inverse images");
        for (const Word &w : images_) check_rank(w, rank);
        for (const Word &w : inverse_images_) check_rank(w, rank);
    }

    static FreeAutomorphism identity(Rank rank)
    {
        std::vector<Word> gens;
        for (int i = 1; i <= rank.n(); ++i) gens.push_back(Word::generator(i));
        return FreeAutomorphism(rank, gens, gens, "identity");
    }

    Rank rank() const { return rank_; }
    const std::vector<Word> &images() const { return images_; }
    const std::vector<Word> &inverse_images() const { return inverse_images_; }
    const std::string &label() const { return label_; }
    const Word &image(int i) const { return images_.at(i - 1); }

    Word apply(const Word &u) const { return substitute(images_, u); }
    Word apply_inverse(const Word &u) const { return substitute(inverse_images_, u); }

    bool inverse_consistent() const
    {
        for (int i = 1; i <= rank_.n(); ++i) {
            const Word x = Word::generator(i);
            if (apply_inverse(images_[i - 1]) != x || apply(inverse_images_[i - 1]) != x) return false;
        }
        return true;
    }

    bool fixes_boundary() const
    {
        const Word c = boundary_word(rank_);
        return apply(c) == c;
    }

    FreeAutomorphism relabeled(std::string label) const
    {
        FreeAutomorphism f = *this;
        f.label_ = std::move(label);
        return f;
    }

    friend bool operator==(const FreeAutomorphism &a, const FreeAutomorphism &b)
    {
        return a.rank_ == b.rank_ && a.images_ == b.images_;
    }

private:
    Word substitute(const std::vector<Word> &img, const Word &u) const
    {
        check_rank(u, rank_);
        Word out;
        for (int a : u.letters()) {
            const Word &w = img[std::abs(a) - 1];
            if (a > 0) {
                for (int c : w.letters()) out.push(c);
            } else {
                const auto &s = w.letters();
                for (auto it = s.rbegin(); it != s.rend(); ++it) out.push(-*it);
            }
        }
        return out;
    }

    Rank rank_;
    std::vector<Word> images_;
    std::vector<Word> inverse_images_;
    std::string label_;
};

inline Word apply(const FreeAutomorphism &f, const Word &u) { return f.apply(u); }

// Applies f first, then g.
inline FreeAutomorphism compose(const FreeAutomorphism &f, const FreeAutomorphism &g)
{
    if (!(f.rank() == g.rank())) throw Incompatible("automorphisms of different rank");
    std::vector<Word> img, inv;
    for (int i = 0; i < f.rank().n(); ++i) {
        img.push_back(g.apply(f.images()[i]));
        inv.push_back(f.apply_inverse(g.inverse_images()[i]));
    }
    return FreeAutomorphism(f.rank(), std::move(img), std::move(inv), g.label() + "∘" + f.label());
}

inline FreeAutomorphism invert(const FreeAutomorphism &f)
{
    return FreeAutomorphism(f.rank(), f.inverse_images(), f.images(), "(" + f.label() + ")^-1");
}

inline FreeAutomorphism power(const FreeAutomorphism &f, long long n)
{
    FreeAutomorphism base = n < 0 ? invert(f) : f;
    FreeAutomorphism acc = FreeAutomorphism::identity(f.rank());
    for (long long e = n < 0 ? -n : n; e > 0; e >>= 1) {
        if (e & 1) acc = compose(acc, base);
        if (e > 1) base = compose(base, base);
    }
    return acc.relabeled(n == 1 ? f.label() : "(" + f.label() + ")^" + std::to_string(n));
}

// Symplectic representation in the block basis: column j is the exponent vector of f(x_j).
inline IntMatrix symplectic_rep_unchecked(const FreeAutomorphism &f)
{
    const int g = f.rank().g;
    IntMatrix m(2 * g, 2 * g);
    for (int j = 1; j <= 2 * g; ++j) {
        const auto ev = exponent_vector(f.image(j), f.rank());
        for (int i = 1; i <= 2 * g; ++i) m(block_position(i, g), block_position(j, g)) = ev[i - 1];
    }
    return m;
}

inline IntMatrix symplectic_rep(const FreeAutomorphism &f)
{
    IntMatrix m = symplectic_rep_unchecked(f);
    if (!is_symplectic(m)) throw InvariantViolation("symplectic representation of " + f.label() + " is not symplectic");
    return m;
}

inline int congruence_level(const FreeAutomorphism &f, std::uint32_t p)
{
    require_odd_prime(p);
    return congruence_level(symplectic_rep(f), p);
}

// Homology class in the block basis.
using HomologyClass = std::vector<Integer>;

inline HomologyClass homology_class(const Word &w, Rank rank)
{
    const auto ev = exponent_vector(w, rank);
    HomologyClass c(rank.n(), 0);
    for (int i = 1; i <= rank.n(); ++i) c[block_position(i, rank.g)] = ev[i - 1];
    return c;
}

// Transvection x -> x + n i(x, c) c.
inline IntMatrix transvection(const HomologyClass &c, long long n, int g)
{
    IntMatrix m = IntMatrix::identity(2 * g);
    for (int col = 0; col < 2 * g; ++col) {
        HomologyClass e(2 * g, 0);
        e[col] = 1;
        const Integer k = intersection(e, c, g) * n;
        for (int row = 0; row < 2 * g; ++row) m(row, col) += k * c[row];
    }
    return m;
}

enum class CatalogKind { Identity, TwistA, TwistB, TwistCurve, TwistSeparating, BoundingPair, Power, Composite };

inline std::string to_string(CatalogKind k)
{
    switch (k) {
    case CatalogKind::Identity: return "identity";
    case CatalogKind::TwistA: return "twist_a";
    case CatalogKind::TwistB: return "twist_b";
    case CatalogKind::TwistCurve: return "twist_curve";
    case CatalogKind::TwistSeparating: return "twist_separating";
    case CatalogKind::BoundingPair: return "bounding_pair";
    case CatalogKind::Power: return "power";
    default: return "composite";
    }
}

struct CatalogEntry {
    std::string name;
    CatalogKind kind = CatalogKind::Composite;
    FreeAutomorphism automorphism;
    // Twists (and their powers): the curve's homology class and the exponent. Ψ is then
    // the transvection by exponent * curve_class; entries without a class must be Torelli.
    std::optional<HomologyClass> curve_class;
    long long exponent = 1;
    bool torelli = false;
    CatalogKind base_kind = CatalogKind::Composite; // kind of the underlying entry for powers
};

inline CatalogEntry make_entry(std::string name, CatalogKind kind, FreeAutomorphism automorphism)
{
    CatalogEntry e;
    e.name = std::move(name);
    e.kind = kind;
    e.automorphism = std::move(automorphism);
    return e;
}

struct EntryCheck {
    bool inverse = false;
    bool boundary = false;
    bool homology = false;
    bool ok() const { return inverse && boundary && homology; }
};

inline EntryCheck check_entry(const CatalogEntry &e)
{
    EntryCheck c;
    const FreeAutomorphism &f = e.automorphism;
    c.inverse = f.inverse_consistent();
    c.boundary = f.fixes_boundary();
    const IntMatrix psi = symplectic_rep_unchecked(f);
    const int g = f.rank().g;
    if (e.curve_class)
        c.homology = psi == transvection(*e.curve_class, e.exponent, g);
    else if (e.torelli)
        c.homology = psi == IntMatrix::identity(2 * g);
    else
        c.homology = is_symplectic(psi);
    return c;
}

inline CatalogEntry admit(CatalogEntry e)
{
    const EntryCheck c = check_entry(e);
    if (!c.ok())
        throw InvariantViolation("catalog entry " + e.name + " fails" + (c.inverse ? "" : " inverse") +
                                 (c.boundary ? "" : " boundary") + (c.homology ? "" : " homology") + " check");
    return e;
}

namespace detail {

inline int A(int i) { return 2 * i - 1; }
inline int B(int i) { return 2 * i; }

inline Word w(std::initializer_list<int> letters) { return Word::from_signed(std::vector<int>(letters)); }

struct ImageTable {
    Rank rank;
    std::vector<Word> fwd, inv;

    explicit ImageTable(Rank r) : rank(r)
    {
        for (int i = 1; i <= r.n(); ++i) {
            fwd.push_back(Word::generator(i));
            inv.push_back(Word::generator(i));
        }
    }
    void set(int gen, Word f, Word i)
    {
        fwd[gen - 1] = std::move(f);
        inv[gen - 1] = std::move(i);
    }
    FreeAutomorphism build(const std::string &label) const { return FreeAutomorphism(rank, fwd, inv, label); }
};

inline void check_handle(int i, Rank rank)
{
    if (i < 1 || i > rank.g)
        throw InvalidArgument("handle index " + std::to_string(i) + " outside 1.." + std::to_string(rank.g));
}

inline HomologyClass unit_class(Rank rank, std::initializer_list<std::pair<int, int>> terms)
{
    HomologyClass c(rank.n(), 0);
    for (auto [gen, coeff] : terms) c[block_position(gen, rank.g)] += coeff;
    return c;
}

} // namespace detail

// Twist about a_i: b_i -> b_i a_i.
inline CatalogEntry twist_a(int i, Rank rank)
{
    using namespace detail;
    check_handle(i, rank);
    ImageTable t(rank);
    t.set(B(i), w({B(i), A(i)}), w({B(i), -A(i)}));
    CatalogEntry e = make_entry("Ta" + std::to_string(i), CatalogKind::TwistA, t.build("Ta" + std::to_string(i)));
    e.curve_class = unit_class(rank, {{A(i), 1}});
    return admit(e);
}

// Twist about b_i: a_i -> a_i b_i^-1.
inline CatalogEntry twist_b(int i, Rank rank)
{
    using namespace detail;
    check_handle(i, rank);
    ImageTable t(rank);
    t.set(A(i), w({A(i), -B(i)}), w({A(i), B(i)}));
    CatalogEntry e = make_entry("Tb" + std::to_string(i), CatalogKind::TwistB, t.build("Tb" + std::to_string(i)));
    e.curve_class = unit_class(rank, {{B(i), 1}});
    return admit(e);
}

inline CatalogEntry twist_nonseparating(char which, int i, Rank rank)
{
    if (which == 'A' || which == 'a') return twist_a(i, rank);
    if (which == 'B' || which == 'b') return twist_b(i, rank);
    throw InvalidArgument(std::string("unknown twist family '") + which + "'");
}

// Twist about the curve a_i a_j (class a_i + a_j), i < j.
inline CatalogEntry twist_aa(int i, int j, Rank rank)
{
    using namespace detail;
    check_handle(i, rank);
    check_handle(j, rank);
    if (i >= j) throw InvalidArgument("twist_aa needs i < j");
    const Word K = w({-A(j), -A(i), A(j), A(i)});
    const Word L = w({A(i), A(j), -A(i), -A(j)});
    ImageTable t(rank);
    t.set(A(i), w({-A(j), A(i), A(j)}), w({A(i), A(j), A(i), -A(j), -A(i)}));
    t.set(B(i), K * w({B(i), A(i), A(j)}), L * w({B(i), -A(j), -A(i)}));
    for (int k = i + 1; k < j; ++k)
        for (int x : {A(k), B(k)}) t.set(x, conjugate(Word::generator(x), K), conjugate(Word::generator(x), L));
    t.set(A(j), K * w({A(j)}), w({A(i), A(j), -A(i)}));
    t.set(B(j), w({B(j), A(i), A(j)}), w({B(j), -A(j), -A(i)}));
    const std::string name = "Taa" + std::to_string(i) + "_" + std::to_string(j);
    CatalogEntry e = make_entry(name, CatalogKind::TwistCurve, t.build(name));
    e.curve_class = unit_class(rank, {{A(i), 1}, {A(j), 1}});
    return admit(e);
}

// Twist about the curve b_i b_j (class b_i + b_j), i < j.
inline CatalogEntry twist_bb(int i, int j, Rank rank)
{
    using namespace detail;
    check_handle(i, rank);
    check_handle(j, rank);
    if (i >= j) throw InvalidArgument("twist_bb needs i < j");
    const Word M = w({B(j), B(i), -B(j), -B(i)});
    const Word N = w({-B(i), -B(j), B(i), B(j)});
    ImageTable t(rank);
    t.set(A(i), w({A(i), -B(i), -B(j)}), w({A(i), B(j), B(i)}));
    t.set(B(i), w({B(j), B(i), -B(j)}), N * w({B(i)}));
    for (int k = i + 1; k < j; ++k)
        for (int x : {A(k), B(k)}) t.set(x, conjugate(Word::generator(x), M), conjugate(Word::generator(x), N));
    t.set(A(j), M * w({A(j), -B(i), -B(j)}), N * w({A(j), B(j), B(i)}));
    t.set(B(j), w({B(j), B(i), B(j), -B(i), -B(j)}), w({-B(i), B(j), B(i)}));
    const std::string name = "Tbb" + std::to_string(i) + "_" + std::to_string(j);
    CatalogEntry e = make_entry(name, CatalogKind::TwistCurve, t.build(name));
    e.curve_class = unit_class(rank, {{B(i), 1}, {B(j), 1}});
    return admit(e);
}

// Twist about the curve c_h a_{h+1} (class a_{h+1}), where c_h is the separating curve of handles 1..h.
inline CatalogEntry twist_chain(int h, Rank rank)
{
    using namespace detail;
    if (h < 1 || h >= rank.g) throw InvalidArgument("chain curve index must satisfy 1 <= h < g");
    const Word G = separating_curve(h) * Word::generator(A(h + 1));
    const Word Gi = invert(G);
    ImageTable t(rank);
    for (int k = 1; k <= h; ++k)
        for (int x : {A(k), B(k)}) t.set(x, conjugate(Word::generator(x), Gi), conjugate(Word::generator(x), G));
    t.set(A(h + 1), conjugate(Word::generator(A(h + 1)), Gi), conjugate(Word::generator(A(h + 1)), G));
    t.set(B(h + 1), Word::generator(B(h + 1)) * G, Word::generator(B(h + 1)) * Gi);
    const std::string name = "Tc" + std::to_string(h);
    CatalogEntry e = make_entry(name, CatalogKind::TwistCurve, t.build(name));
    e.curve_class = unit_class(rank, {{A(h + 1), 1}});
    return admit(e);
}

// Twist about the separating curve c_h: x_j -> c_h x_j c_h^-1 for j <= 2h.
inline CatalogEntry twist_separating(int h, Rank rank)
{
    using namespace detail;
    if (h < 1 || h >= rank.g) throw InvalidArgument("separating curve index must satisfy 1 <= h < g");
    const Word c = separating_curve(h);
    ImageTable t(rank);
    for (int x = 1; x <= 2 * h; ++x)
        t.set(x, conjugate(Word::generator(x), c), conjugate(Word::generator(x), invert(c)));
    const std::string name = "sep" + std::to_string(h);
    CatalogEntry e = make_entry(name, CatalogKind::TwistSeparating, t.build(name));
    e.torelli = true;
    return admit(e);
}

inline CatalogEntry power_entry(const CatalogEntry &base, long long n)
{
    CatalogEntry e;
    e.name = base.name + "^" + std::to_string(n);
    e.kind = CatalogKind::Power;
    e.base_kind = base.kind == CatalogKind::Power ? base.base_kind : base.kind;
    e.automorphism = power(base.automorphism, n).relabeled(e.name);
    e.curve_class = base.curve_class;
    e.exponent = base.exponent * n;
    e.torelli = base.torelli;
    return admit(e);
}

// h T h^-1 as functions: apply h^-1, then T, then h.
inline FreeAutomorphism conjugate_map(const FreeAutomorphism &t, const FreeAutomorphism &h)
{
    return compose(compose(invert(h), t), h);
}

// Twist about a curve in class b_i - b_j, i < j, obtained by conjugating the b_i b_j twist
// with (T_{a_j} T_{b_j})^3, which acts as -Id on handle j.
inline CatalogEntry twist_bd(int i, int j, Rank rank)
{
    using namespace detail;
    const CatalogEntry bb = twist_bb(i, j, rank);
    const FreeAutomorphism h = power(compose(twist_b(j, rank).automorphism, twist_a(j, rank).automorphism), 3);
    const std::string name = "Tbd" + std::to_string(i) + "_" + std::to_string(j);
    CatalogEntry e = make_entry(name, CatalogKind::TwistCurve, conjugate_map(bb.automorphism, h).relabeled(name));
    e.curve_class = unit_class(rank, {{B(i), 1}, {B(j), -1}});
    return admit(e);
}

// Standard bounding pair: T_{a_{h+1}} composed after the inverse twist about c_h a_{h+1}.
inline CatalogEntry standard_bounding_pair(int h, Rank rank)
{
    const CatalogEntry ta = twist_a(h + 1, rank);
    const CatalogEntry tc = twist_chain(h, rank);
    CatalogEntry e;
    e.kind = CatalogKind::BoundingPair;
    e.automorphism = compose(invert(tc.automorphism), ta.automorphism);
    e.torelli = true;
    return e;
}

inline CatalogEntry parse_catalog_entry(const std::string &expr, Rank rank);

// Conjugators applied to the standard bounding pairs to enlarge the family.
inline const std::vector<std::pair<int, std::string>> &bounding_pair_conjugators()
{
    static const std::vector<std::pair<int, std::string>> list = {
        {1, "Tb2"},           {2, "Tb3"},           {1, "Tbb1_2"},           {1, "Taa1_3"},
        {1, "Tbb1_3"},        {2, "Tbb1_3"},        {1, "Tbb2_3"},           {2, "Tbb2_3"},
        {1, "Tb2*Taa1_2"},    {1, "Tb2*Taa1_3"},    {1, "Tb2*Tbb1_3"},       {1, "Tb2*Taa2_3"},
        {2, "Tb3*Taa1_3"},    {2, "Tb3*Taa2_3"},    {1, "Tbb1_2*Taa2_3"},    {1, "Taa1_3*Tb3"},
        {1, "Tb2*Taa1_2*Tbb2_3"}, {1, "Tb2*Taa1_3*Tb1"},
    };
    return list;
}

// The built-in bounding pairs at genus g: the standard ones bp1..bp(g-1), then conjugates.
inline std::vector<CatalogEntry> bounding_pairs(Rank rank)
{
    std::vector<CatalogEntry> out;
    for (int h = 1; h < rank.g; ++h) {
        CatalogEntry e = standard_bounding_pair(h, rank);
        e.name = "bp" + std::to_string(out.size() + 1);
        e.automorphism = e.automorphism.relabeled(e.name);
        out.push_back(admit(e));
    }
    if (rank.g < 2) return out;
    for (const auto &[h, expr] : bounding_pair_conjugators()) {
        if (h >= rank.g) continue;
        CatalogEntry conj;
        try {
            conj = parse_catalog_entry(expr, rank);
        } catch (const InvalidArgument &) {
            continue; // uses handles beyond this genus
        }
        CatalogEntry e = standard_bounding_pair(h, rank);
        e.name = "bp" + std::to_string(out.size() + 1);
        e.automorphism = conjugate_map(e.automorphism, conj.automorphism).relabeled(e.name);
        out.push_back(admit(e));
    }
    return out;
}

inline CatalogEntry bounding_pair(int index, Rank rank)
{
    const auto all = bounding_pairs(rank);
    if (index < 1 || index > static_cast<int>(all.size()))
        throw InvalidArgument("unknown bounding pair bp" + std::to_string(index) + " at genus " +
                              std::to_string(rank.g));
    return all[index - 1];
}

namespace detail {

inline bool take_prefix(std::string_view &s, std::string_view prefix)
{
    if (s.substr(0, prefix.size()) != prefix) return false;
    s.remove_prefix(prefix.size());
    return true;
}

inline int take_int(std::string_view &s, const std::string &ctx)
{
    std::size_t k = 0;
    int v = 0;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])) && k < 6) v = v * 10 + (s[k++] - '0');
    if (k == 0) throw ParseError("expected a number in '" + ctx + "'");
    s.remove_prefix(k);
    return v;
}

} // namespace detail

// Resolves one catalog name: identity, Ta<i>, Tb<i>, Taa<i>_<j>, Tbb<i>_<j>, Tbd<i>_<j>, Tc<h>, sep<h>, bp<k>.
inline CatalogEntry named_entry(const std::string &name, Rank rank)
{
    using detail::take_int;
    using detail::take_prefix;
    if (name == "identity" || name == "id") {
        CatalogEntry e = make_entry("identity", CatalogKind::Identity, FreeAutomorphism::identity(rank));
        e.torelli = true;
        return e;
    }
    std::string_view s = name;
    auto pair_args = [&](std::string_view rest) {
        const int i = take_int(rest, name);
        if (!take_prefix(rest, "_")) throw ParseError("expected '_' in '" + name + "'");
        const int j = take_int(rest, name);
        if (!rest.empty()) throw ParseError("trailing characters in '" + name + "'");
        return std::make_pair(i, j);
    };
    auto single_arg = [&](std::string_view rest) {
        const int i = take_int(rest, name);
        if (!rest.empty()) throw ParseError("trailing characters in '" + name + "'");
        return i;
    };
    if (take_prefix(s, "Taa")) {
        auto [i, j] = pair_args(s);
        return twist_aa(i, j, rank);
    }
    if (take_prefix(s, "Tbb")) {
        auto [i, j] = pair_args(s);
        return twist_bb(i, j, rank);
    }
    if (take_prefix(s, "Tbd")) {
        auto [i, j] = pair_args(s);
        return twist_bd(i, j, rank);
    }
    if (take_prefix(s, "Ta")) return twist_a(single_arg(s), rank);
    if (take_prefix(s, "Tb")) return twist_b(single_arg(s), rank);
    if (take_prefix(s, "Tc")) return twist_chain(single_arg(s), rank);
    if (take_prefix(s, "sep")) return twist_separating(single_arg(s), rank);
    if (take_prefix(s, "bp")) return bounding_pair(single_arg(s), rank);
    throw ParseError("unknown mapping class name '" + name + "'");
}

namespace detail {

class ExpressionParser {
public:
    ExpressionParser(const std::string &text, Rank rank) : text_(text), rank_(rank) {}

    CatalogEntry parse()
    {
        CatalogEntry e = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected '" + text_.substr(pos_) + "' in map expression");
        e.name = text_;
        e.automorphism = e.automorphism.relabeled(text_);
        return e;
    }

private:
    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    // Left to right: "A*B" applies A first, then B.
    CatalogEntry expr()
    {
        CatalogEntry acc = factor();
        while (eat('*')) {
            CatalogEntry rhs = factor();
            CatalogEntry e;
            e.kind = CatalogKind::Composite;
            e.automorphism = compose(acc.automorphism, rhs.automorphism);
            e.torelli = acc.torelli && rhs.torelli;
            e.name = acc.name + "*" + rhs.name;
            acc = admit(e);
        }
        return acc;
    }

    CatalogEntry factor()
    {
        CatalogEntry base = atom();
        while (eat('^')) {
            skip_ws();
            bool neg = false;
            if (pos_ < text_.size() && text_[pos_] == '-') {
                neg = true;
                ++pos_;
            }
            std::size_t start = pos_;
            long long n = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) && n < 100000)
                n = n * 10 + (text_[pos_++] - '0');
            if (pos_ == start) throw ParseError("expected an exponent after '^'");
            base = power_entry(base, neg ? -n : n);
        }
        return base;
    }

    CatalogEntry atom()
    {
        if (eat('(')) {
            CatalogEntry e = expr();
            if (!eat(')')) throw ParseError("missing ')' in map expression");
            return e;
        }
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_) throw ParseError("expected a mapping class name at position " + std::to_string(start));
        return named_entry(text_.substr(start, pos_ - start), rank_);
    }

    std::string text_;
    Rank rank_;
    std::size_t pos_ = 0;
};

} // namespace detail

// Grammar: names, "^n" powers, "*" composition (left to right application), parentheses.
inline CatalogEntry parse_catalog_entry(const std::string &expr, Rank rank)
{
    return detail::ExpressionParser(expr, rank).parse();
}

inline FreeAutomorphism parse_map_expression(const std::string &expr, Rank rank)
{
    return parse_catalog_entry(expr, rank).automorphism;
}

// Basic twists at genus g: about a_i, b_i, a_i a_j, b_i b_j, b_i - b_j, and the chain curves.
inline std::vector<CatalogEntry> basic_twists(Rank rank)
{
    std::vector<CatalogEntry> out;
    for (int i = 1; i <= rank.g; ++i) {
        out.push_back(twist_a(i, rank));
        out.push_back(twist_b(i, rank));
    }
    for (int i = 1; i <= rank.g; ++i)
        for (int j = i + 1; j <= rank.g; ++j) {
            out.push_back(twist_aa(i, j, rank));
            out.push_back(twist_bb(i, j, rank));
            out.push_back(twist_bd(i, j, rank));
        }
    for (int h = 1; h < rank.g; ++h) out.push_back(twist_chain(h, rank));
    return out;
}

// The catalog used by the acceptance checks at (g, p): basic twists and their p-th and
// p^2-th powers, separating twists, bounding pairs and their p-th powers.
inline std::vector<CatalogEntry> catalog(Rank rank, std::uint32_t p)
{
    require_odd_prime(p);
    std::vector<CatalogEntry> out;
    CatalogEntry id = named_entry("identity", rank);
    out.push_back(id);
    const auto twists = basic_twists(rank);
    for (const auto &t : twists) out.push_back(t);
    for (const auto &t : twists) out.push_back(power_entry(t, p));
    for (const auto &t : twists) out.push_back(power_entry(t, static_cast<long long>(p) * p));
    for (int h = 1; h < rank.g; ++h) out.push_back(twist_separating(h, rank));
    for (const auto &bp : bounding_pairs(rank)) {
        out.push_back(bp);
        out.push_back(power_entry(bp, p));
    }
    return out;
}

} // namespace johnsonlab
