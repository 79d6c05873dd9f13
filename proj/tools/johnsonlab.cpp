// Command-line front end: every subcommand prints one JSON envelope {status, data, diagnostics}.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "johnsonlab/acceptance.hpp"
#include "johnsonlab/johnsonlab.hpp"
#include "johnsonlab/json_io.hpp"

namespace {

using namespace johnsonlab;
using json_io::json;

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_parse = 2;
constexpr int exit_not_in_filtration = 3;
constexpr int exit_not_qhs = 4;

// Result of a subcommand handler.
struct Outcome {
    std::string status = "ok";
    json data;
    json diagnostics = json::array();
};

std::string read_stream(std::istream &in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

std::string read_source(const std::string &path)
{
    if (path == "-") return read_stream(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_stream(in);
}

json parse_json(const std::string &text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::vector<int> parse_int_list(const std::string &text)
{
    std::vector<int> out;
    std::string s = text;
    for (char &c : s)
        if (c == ',') c = ' ';
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception &) {
            throw ParseError("bad integer '" + tok + "'");
        }
    }
    return out;
}

// Smallest genus covering all generators (at least 1) unless one is given.
int word_genus(const std::vector<Word> &words, int genus)
{
    if (genus > 0) return genus;
    int m = 0;
    for (const Word &w : words) m = std::max(m, w.max_index());
    return std::max(1, (m + 1) / 2);
}

Word word_arg(const std::string &text, int genus) { return parse_word(text, genus); }

// Catalog expression, inline JSON object, or @file with JSON.
FreeAutomorphism map_arg(const std::string &text, int genus)
{
    std::string body = text;
    if (!body.empty() && body[0] == '@') body = read_source(body.substr(1));
    const auto first = body.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && body[first] == '{') {
        const json j = parse_json(body);
        FreeAutomorphism f = json_io::mapping_class_from(j);
        if (genus > 0 && f.rank().g != genus) throw Incompatible("JSON rank does not match --genus");
        return f;
    }
    if (genus > 0) return parse_map_expression(body, Rank(genus));
    // smallest genus where every name in the expression exists
    for (int g = 1;; ++g) {
        try {
            return parse_map_expression(body, Rank(g));
        } catch (const InvalidGenerator &) {
        } catch (const OutOfRange &) {
        } catch (const InvalidArgument &) {
        }
        if (g >= 16) throw ParseError("no genus up to 16 accepts '" + body + "'");
    }
}

SeriesKind series_arg(const std::string &name, std::uint32_t p) { return parse_series(name, p); }

json verdict_json(Verdict v) { return to_string(v); }

template <class F>
auto with_ring(std::uint32_t p, F &&f)
{
    if (p == 0) return f(IntegerRing{});
    require_odd_prime(p);
    return f(PrimeField(p));
}

// --- handlers ---

struct WordOpts {
    std::string word, times, commutator_with, conjugator;
    long long power = 1;
    bool have_power = false;
    bool boundary = false;
    int genus = 0;
};

Outcome cmd_word(const WordOpts &o)
{
    const Word raw = parse_word(o.word);
    std::vector<Word> all = {raw};
    if (!o.times.empty()) all.push_back(parse_word(o.times));
    if (!o.commutator_with.empty()) all.push_back(parse_word(o.commutator_with));
    if (!o.conjugator.empty()) all.push_back(parse_word(o.conjugator));
    const Rank rank(word_genus(all, o.genus));
    const Word u = word_arg(o.word, rank.g);
    json d = {{"genus", rank.g}, {"word", json_io::word(u)}, {"length", u.size()}, {"inverse", json_io::word(invert(u))}};
    json ev = json::array();
    for (long long e : exponent_vector(u, rank)) ev.push_back(std::to_string(e));
    d["exponent_vector"] = ev;
    if (o.have_power) d["power"] = {{"n", std::to_string(o.power)}, {"word", json_io::word(power(u, o.power))}};
    if (!o.times.empty()) d["product"] = json_io::word(multiply(u, word_arg(o.times, rank.g)));
    if (!o.commutator_with.empty()) d["commutator"] = json_io::word(commutator(u, word_arg(o.commutator_with, rank.g)));
    if (!o.conjugator.empty()) d["conjugate"] = json_io::word(conjugate(u, word_arg(o.conjugator, rank.g)));
    if (o.boundary) d["boundary_word"] = json_io::word(boundary_word(rank));
    return {"ok", d};
}

struct SampleOpts {
    std::string series = "lcs";
    int depth = 1, count = 5, genus = 2;
    std::uint32_t p = 3;
    std::uint64_t seed = 0;
};

Outcome cmd_sample(const SampleOpts &o)
{
    const SeriesKind s = series_arg(o.series, o.p);
    const auto ws = sample_series(s, o.depth, o.count, o.seed, Rank(o.genus));
    return {"ok",
            {{"series", s.name()}, {"depth", o.depth}, {"genus", o.genus}, {"seed", o.seed}, {"words", json_io::words(ws)}}};
}

struct FoxOpts {
    std::string word, index;
    std::uint32_t p = 0;
    bool bar = false;
    int genus = 0;
};

Outcome cmd_fox(const FoxOpts &o)
{
    const Rank rank(word_genus({parse_word(o.word)}, o.genus));
    const Word u = word_arg(o.word, rank.g);
    const MultiIndex m{parse_int_list(o.index)};
    const auto e = higher_fox_derivative(IntegralGroupRing::from_word(u, IntegerRing{}), m, rank);
    json d = {{"genus", rank.g}, {"word", json_io::word(u)}, {"multi_index", m.indices}, {"derivative", json_io::group_ring(e)},
              {"augmentation", augmentation(e).str()}};
    if (o.p) {
        require_odd_prime(o.p);
        d["eval_mod"] = {{"p", o.p}, {"value", std::to_string(eval_mod(e, o.p))}};
    }
    if (o.bar) d["bar"] = json_io::group_ring(bar(e));
    return {"ok", d};
}

struct MagnusOpts {
    std::string word, monomial, times;
    int degree = 4;
    std::uint32_t p = 0;
    bool inverse = false;
    int genus = 0;
};

Outcome cmd_magnus(const MagnusOpts &o)
{
    std::vector<Word> all = {parse_word(o.word)};
    if (!o.times.empty()) all.push_back(parse_word(o.times));
    const Rank rank(word_genus(all, o.genus));
    const Word u = word_arg(o.word, rank.g);
    return with_ring(o.p, [&](auto ring) {
        const auto s = magnus_embed(u, o.degree, rank, ring);
        json d = {{"genus", rank.g}, {"word", json_io::word(u)}, {"series", json_io::series(s)}};
        const Valuation v = valuation(s);
        d["valuation"] = v.degree ? json({{"degree", *v.degree}, {"witness_monomial", json_io::monomial(v.witness)}})
                                  : json({{"degree", ">=" + std::to_string(v.truncation + 1)}, {"truncation", v.truncation}});
        if (!o.monomial.empty()) {
            const Monomial m(parse_int_list(o.monomial));
            d["coefficient"] = {{"monomial", json_io::monomial(m)}, {"value", ring.format(coefficient(s, m))}};
        }
        if (o.inverse) d["inverse"] = json_io::series(series_inverse(s));
        if (!o.times.empty()) {
            const auto t = magnus_embed(word_arg(o.times, rank.g), o.degree, rank, ring);
            d["product"] = json_io::series(series_mul(s, t));
        }
        return Outcome{"ok", d};
    });
}

struct MemberOpts {
    std::string series = "lcs", word;
    bool from_stdin = false;
    int depth = 1, genus = 0;
    std::uint32_t p = 3;
};

Outcome cmd_member(const MemberOpts &o)
{
    const std::string text = o.from_stdin ? read_stream(std::cin) : o.word;
    const Rank rank(word_genus({parse_word(text)}, o.genus));
    const Word u = word_arg(text, rank.g);
    const SeriesKind s = series_arg(o.series, o.p);
    json d = json_io::member_report(member(u, s, o.depth, rank));
    d["word"] = json_io::word(u);
    d["genus"] = rank.g;
    return {"ok", d};
}

struct L2SOpts {
    std::string word;
    std::uint32_t p = 3;
    int genus = 0;
};

Outcome cmd_l2s(const L2SOpts &o)
{
    const Rank rank(word_genus({parse_word(o.word)}, o.genus));
    const Word u = word_arg(o.word, rank.g);
    json d = json_io::l2s(l2s_image(u, o.p, rank));
    d["word"] = json_io::word(u);
    d["genus"] = rank.g;
    return {"ok", d};
}

struct CofinalityOpts {
    std::string direction = "s2z";
    int depth = 1, count = 20, genus = 2;
    std::uint32_t p = 3;
    std::uint64_t seed = 0;
};

Outcome cmd_cofinality(const CofinalityOpts &o)
{
    CofinalityDirection dir;
    if (o.direction == "s2z")
        dir = CofinalityDirection::StoZ;
    else if (o.direction == "z2s")
        dir = CofinalityDirection::ZtoS;
    else
        throw ParseError("direction must be s2z or z2s");
    const CofinalityReport r = cofinality_check(dir, o.depth, o.p, o.count, o.seed, Rank(o.genus));
    return {r.counterexamples.empty() ? "ok" : "fail",
            {{"direction", o.direction},
             {"depth", r.depth},
             {"p", r.p},
             {"samples", r.samples},
             {"counterexamples", json_io::words(r.counterexamples)}}};
}

struct MapOpts {
    std::string map, apply_word, series;
    int genus = 0, depth = 1;
    std::uint32_t p = 3;
};

Outcome cmd_map(const MapOpts &o)
{
    const FreeAutomorphism f = map_arg(o.map, o.genus);
    const Rank rank = f.rank();
    json d = {{"mapping_class", json_io::mapping_class(f)},
              {"checks", {{"inverse_consistent", f.inverse_consistent()}, {"fixes_boundary", f.fixes_boundary()}}},
              {"symplectic_rep", json_io::matrix(symplectic_rep(f))},
              {"congruence_level", {{"p", o.p}, {"level", congruence_level(f, o.p)}}}};
    if (!o.apply_word.empty()) {
        const Word u = word_arg(o.apply_word, rank.g);
        d["apply"] = {{"word", json_io::word(u)}, {"image", json_io::word(f.apply(u))}, {"inverse_image", json_io::word(f.apply_inverse(u))}};
    }
    if (!o.series.empty()) {
        const SeriesKind s = series_arg(o.series, o.p);
        d["filtration_member"] = {{"series", s.name()}, {"depth", o.depth}, {"verdict", verdict_json(filtration_member(f, s, o.depth))}};
    }
    return {"ok", d};
}

struct CatalogOpts {
    int genus = 2;
    std::uint32_t p = 3;
    bool full = false;
};

Outcome cmd_catalog(const CatalogOpts &o)
{
    const Rank rank(o.genus);
    json entries = json::array();
    for (const auto &e : catalog(rank, o.p)) {
        const EntryCheck c = check_entry(e);
        json j = {{"name", e.name},
                  {"kind", to_string(e.kind)},
                  {"torelli", e.torelli},
                  {"congruence_level", congruence_level(e.automorphism, o.p)},
                  {"checks", {{"inverse", c.inverse}, {"boundary", c.boundary}, {"homology", c.homology}}}};
        if (o.full) j["mapping_class"] = json_io::mapping_class(e.automorphism);
        entries.push_back(j);
    }
    return {"ok", {{"genus", o.genus}, {"p", o.p}, {"size", entries.size()}, {"entries", entries}}};
}

struct TauOpts {
    std::string map, variant = "z";
    int level = 1, genus = 0;
    std::uint32_t p = 3;
};

Outcome cmd_tau(const TauOpts &o)
{
    const FreeAutomorphism f = map_arg(o.map, o.genus);
    json d = {{"map", f.label()}, {"genus", f.rank().g}, {"variant", o.variant}};
    if (o.variant == "s") {
        if (o.level != 1) throw InvalidArgument("the s variant is only defined at level 1");
        const Tau1SValue v = tau1_s(f, o.p);
        d["value"] = json_io::tau1_s(v);
        d["is_zero"] = v.is_zero();
        return {"ok", d};
    }
    SeriesKind s;
    if (o.variant == "integral")
        s = SeriesKind::lcs();
    else if (o.variant == "z")
        s = SeriesKind::zassenhaus(o.p);
    else
        throw ParseError("variant must be integral, z or s");
    const JohnsonValue v = tau(f, o.level, s);
    d["value"] = json_io::johnson_value(v);
    d["is_zero"] = v.is_zero();
    if (o.level == 1) {
        const JohnsonValue vp = o.variant == "integral" ? reduce_mod(v, o.p) : v;
        d["wedge3"] = json_io::wedge3(wedge3_membership(vp, o.p), f.rank().n());
        d["wedge3"]["p"] = o.p;
    }
    return {"ok", d};
}

struct PerronOpts {
    std::string map;
    int depth = 1, genus = 0, taylor = -1;
    std::uint32_t p = 3;
    bool fox = false;
};

Outcome cmd_perron(const PerronOpts &o)
{
    const FreeAutomorphism f = map_arg(o.map, o.genus);
    const bool perron = perron_member(f, o.depth, o.p);
    const Verdict z = filtration_member(f, SeriesKind::zassenhaus(o.p), o.depth);
    json d = {{"map", f.label()},
              {"genus", f.rank().g},
              {"depth", o.depth},
              {"p", o.p},
              {"perron_member", perron},
              {"zassenhaus_member", verdict_json(z)},
              {"agree", perron == (z == Verdict::True)}};
    if (o.fox || o.taylor >= 0) {
        const FoxMatrix B = fox_matrix(f);
        const int n = f.rank().n();
        if (o.fox) {
            json rows = json::array();
            for (int i = 1; i <= n; ++i) {
                json row = json::array();
                for (int j = 1; j <= n; ++j) row.push_back(json_io::group_ring(B.at(i, j)));
                rows.push_back(row);
            }
            d["fox_matrix"] = rows;
        }
        if (o.taylor >= 0) {
            const TaylorBlock t = taylor_block(B, o.taylor, o.p);
            json rows = json::array();
            for (int i = 0; i < n; ++i) {
                json row = json::array();
                for (int j = 0; j < n; ++j) {
                    json terms = json::array();
                    const auto &tab = t.tables[i * n + j];
                    for (std::size_t m = 0; m < tab.size(); ++m)
                        if (tab[m])
                            terms.push_back({{"monomial", json_io::monomial(Monomial::from_index(m, t.degree, n))}, {"coeff", std::to_string(tab[m])}});
                    row.push_back(terms);
                }
                rows.push_back(row);
            }
            d["taylor_block"] = {{"degree", t.degree}, {"p", t.p}, {"entries", rows}, {"is_zero", t.is_zero()}};
        }
    }
    return {"ok", d};
}

IntMatrix matrix_from_source(const std::string &path)
{
    return json_io::int_matrix_from(parse_json(read_source(path)));
}

struct SpOpts {
    std::string matrix, gen;
    int i = 1, j = 1, genus = 1;
    std::uint32_t p = 3;
};

Outcome cmd_sp(const SpOpts &o)
{
    IntMatrix m;
    if (!o.gen.empty()) {
        if (o.gen == "M")
            m = gen_M(o.i, o.j, o.p, o.genus);
        else if (o.gen == "N")
            m = gen_N(o.i, o.j, o.p, o.genus);
        else
            throw ParseError("--gen must be M or N");
    } else {
        m = matrix_from_source(o.matrix.empty() ? "-" : o.matrix);
    }
    const int level = congruence_level(m, o.p);
    json d = {{"matrix", json_io::matrix(m)}, {"is_symplectic", is_symplectic(m)}, {"p", o.p}, {"congruence_level", level}};
    if (is_symplectic(m)) d["inverse"] = json_io::matrix(symplectic_inverse(m));
    if (level >= 1) {
        const ModMatrix a = sp_abel(m, o.p);
        d["sp_abel"] = json_io::matrix(a, o.p);
        d["is_sp_lie"] = is_sp_lie(a, o.p);
    }
    return {"ok", d};
}

struct HeegaardOpts {
    std::string matrix;
    bool random = false;
    int genus = 2;
    std::uint64_t seed = 0;
    std::uint32_t p = 3;
};

Outcome cmd_heegaard(const HeegaardOpts &o)
{
    IntMatrix m;
    if (o.random) {
        std::mt19937_64 rng(o.seed);
        m = random_symplectic(o.genus, rng);
    } else {
        m = matrix_from_source(o.matrix.empty() ? "-" : o.matrix);
    }
    const HeegaardReduction h = heegaard_reduce(m, o.p);
    json d = json_io::heegaard(h);
    d["input"] = json_io::matrix(m);
    d["p"] = o.p;
    return {h.residual_identity ? "ok" : "fail", d};
}

struct LiftOpts {
    int i = 1, j = 1, genus = 1;
    std::uint32_t p = 3;
};

Outcome cmd_lift(const LiftOpts &o)
{
    const LiftReport r = lift_generator_check(o.i, o.j, o.p, Rank(o.genus));
    return {r.ok() ? "ok" : "fail", json_io::lift(r)};
}

struct SelftestOpts {
    std::string suite = "all";
    std::uint64_t seed = 7;
};

Outcome cmd_selftest(const SelftestOpts &o)
{
    std::set<int> which;
    if (o.suite != "all")
        for (int id : parse_int_list(o.suite)) {
            if (id < 1 || id > static_cast<int>(acceptance::criteria().size())) throw ParseError("unknown suite '" + std::to_string(id) + "'");
            which.insert(id);
        }
    json results = json::array();
    bool all = true;
    for (const auto &r : acceptance::run(o.seed, which)) {
        all = all && r.passed;
        results.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    }
    return {all ? "ok" : "fail", {{"suite", o.suite}, {"seed", o.seed}, {"criteria", results}}};
}

int emit(const Outcome &out)
{
    std::cout << json_io::envelope(out.status, out.data, out.diagnostics).dump(2) << "\n";
    return out.status == "ok" ? exit_ok : exit_error;
}

int emit_error(const std::string &kind, const std::string &message, int code)
{
    json diag = json::array({{{"kind", kind}, {"message", message}}});
    std::cout << json_io::envelope("error", nullptr, diag).dump(2) << "\n";
    return code;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"johnsonlab: filtrations of free groups and Johnson homomorphisms"};
    app.require_subcommand(1);
    std::function<Outcome()> run;

    auto genus_opt = [](CLI::App *c, int &g) { c->add_option("--genus", g, "genus g (free rank 2g); inferred when omitted"); };

    WordOpts word;
    auto *c_word = app.add_subcommand("word", "reduce a word and apply group operations");
    c_word->add_option("--word", word.word, "word such as \"x1 x2 X1\"")->required();
    c_word->add_option("--times", word.times, "right factor for the product");
    c_word->add_option("--commutator", word.commutator_with, "second argument of [u, v] = u v u^-1 v^-1");
    c_word->add_option("--conjugator", word.conjugator, "c in c u c^-1");
    c_word->add_option("--power", word.power, "exponent n for u^n")->each([&](const std::string &) { word.have_power = true; });
    c_word->add_flag("--boundary", word.boundary, "also print the boundary word");
    genus_opt(c_word, word.genus);
    c_word->callback([&] { run = [&] { return cmd_word(word); }; });

    SampleOpts sample;
    auto *c_sample = app.add_subcommand("sample", "sample words from a series term");
    c_sample->add_option("--series", sample.series, "lcs, stallings or zassenhaus");
    c_sample->add_option("--depth", sample.depth, "depth k");
    c_sample->add_option("--count", sample.count, "number of samples");
    c_sample->add_option("--p", sample.p, "odd prime");
    c_sample->add_option("--seed", sample.seed, "random seed");
    c_sample->add_option("--genus", sample.genus, "genus");
    c_sample->callback([&] { run = [&] { return cmd_sample(sample); }; });

    FoxOpts fox;
    auto *c_fox = app.add_subcommand("fox", "iterated Fox derivative of a word");
    c_fox->add_option("--word", fox.word, "word")->required();
    c_fox->add_option("--index", fox.index, "multi-index, first derivative first, e.g. 1,2")->required();
    c_fox->add_option("--p", fox.p, "also evaluate the augmentation mod p");
    c_fox->add_flag("--bar", fox.bar, "also print the involution of the result");
    genus_opt(c_fox, fox.genus);
    c_fox->callback([&] { run = [&] { return cmd_fox(fox); }; });

    MagnusOpts magnus;
    auto *c_magnus = app.add_subcommand("magnus", "truncated Magnus expansion of a word");
    c_magnus->add_option("--word", magnus.word, "word")->required();
    c_magnus->add_option("--degree", magnus.degree, "truncation degree D");
    c_magnus->add_option("--p", magnus.p, "coefficients in F_p (default: integers)");
    c_magnus->add_option("--monomial", magnus.monomial, "coefficient to extract, e.g. 1,2");
    c_magnus->add_option("--times", magnus.times, "multiply by the expansion of this word");
    c_magnus->add_flag("--inverse", magnus.inverse, "also print the series inverse");
    genus_opt(c_magnus, magnus.genus);
    c_magnus->callback([&] { run = [&] { return cmd_magnus(magnus); }; });

    MemberOpts mem;
    auto *c_member = app.add_subcommand("member", "membership of a word in a series term");
    c_member->add_option("--series", mem.series, "lcs, stallings or zassenhaus");
    c_member->add_option("--depth", mem.depth, "depth k");
    c_member->add_option("--p", mem.p, "odd prime");
    auto *w_opt = c_member->add_option("--word", mem.word, "word");
    auto *s_opt = c_member->add_flag("--stdin", mem.from_stdin, "read the word from stdin");
    w_opt->excludes(s_opt);
    genus_opt(c_member, mem.genus);
    c_member->callback([&] { run = [&] { return cmd_member(mem); }; });

    L2SOpts l2s;
    auto *c_l2s = app.add_subcommand("l2s", "image of a level-2 Stallings element");
    c_l2s->add_option("--word", l2s.word, "word")->required();
    c_l2s->add_option("--p", l2s.p, "odd prime");
    genus_opt(c_l2s, l2s.genus);
    c_l2s->callback([&] { run = [&] { return cmd_l2s(l2s); }; });

    CofinalityOpts cof;
    auto *c_cof = app.add_subcommand("cofinality", "sampled inclusion check between Stallings and Zassenhaus terms");
    c_cof->add_option("--direction", cof.direction, "s2z or z2s");
    c_cof->add_option("--depth", cof.depth, "depth l");
    c_cof->add_option("--p", cof.p, "odd prime");
    c_cof->add_option("--count", cof.count, "number of samples");
    c_cof->add_option("--seed", cof.seed, "random seed");
    c_cof->add_option("--genus", cof.genus, "genus");
    c_cof->callback([&] { run = [&] { return cmd_cofinality(cof); }; });

    MapOpts mapo;
    auto *c_map = app.add_subcommand("map", "inspect a mapping class");
    c_map->add_option("--map", mapo.map, "catalog expression, JSON object or @file")->required();
    c_map->add_option("--apply", mapo.apply_word, "word to push forward");
    c_map->add_option("--series", mapo.series, "test filtration membership in this series");
    c_map->add_option("--depth", mapo.depth, "depth for --series");
    c_map->add_option("--p", mapo.p, "odd prime");
    genus_opt(c_map, mapo.genus);
    c_map->callback([&] { run = [&] { return cmd_map(mapo); }; });

    CatalogOpts cat;
    auto *c_cat = app.add_subcommand("catalog", "list the mapping class catalog");
    c_cat->add_option("--genus", cat.genus, "genus");
    c_cat->add_option("--p", cat.p, "odd prime");
    c_cat->add_flag("--full", cat.full, "include the automorphisms");
    c_cat->callback([&] { run = [&] { return cmd_catalog(cat); }; });

    TauOpts tauo;
    auto *c_tau = app.add_subcommand("tau", "Johnson homomorphism of a mapping class");
    c_tau->add_option("--map", tauo.map, "catalog expression, JSON object or @file")->required();
    c_tau->add_option("--level", tauo.level, "level k");
    c_tau->add_option("--variant", tauo.variant, "integral, z or s");
    c_tau->add_option("--p", tauo.p, "odd prime");
    genus_opt(c_tau, tauo.genus);
    c_tau->callback([&] { run = [&] { return cmd_tau(tauo); }; });

    PerronOpts per;
    auto *c_per = app.add_subcommand("perron", "Fox-matrix criterion for the Zassenhaus filtration");
    c_per->add_option("--map", per.map, "catalog expression, JSON object or @file")->required();
    c_per->add_option("--depth", per.depth, "depth k");
    c_per->add_option("--p", per.p, "odd prime");
    c_per->add_option("--taylor", per.taylor, "print the degree-l Taylor block");
    c_per->add_flag("--fox", per.fox, "print the Fox matrix");
    genus_opt(c_per, per.genus);
    c_per->callback([&] { run = [&] { return cmd_perron(per); }; });

    SpOpts sp;
    auto *c_sp = app.add_subcommand("sp", "symplectic matrix checks and congruence generators");
    c_sp->add_option("--matrix", sp.matrix, "JSON matrix file, or - for stdin");
    c_sp->add_option("--gen", sp.gen, "emit generator M or N instead");
    c_sp->add_option("--i", sp.i, "generator index i");
    c_sp->add_option("--j", sp.j, "generator index j");
    c_sp->add_option("--genus", sp.genus, "genus for --gen");
    c_sp->add_option("--p", sp.p, "odd prime");
    c_sp->callback([&] { run = [&] { return cmd_sp(sp); }; });

    HeegaardOpts hee;
    auto *c_hee = app.add_subcommand("heegaard", "normalize a gluing matrix mod p");
    c_hee->add_option("--matrix", hee.matrix, "JSON matrix file, or - for stdin");
    c_hee->add_flag("--random", hee.random, "use a seeded random symplectic matrix");
    c_hee->add_option("--genus", hee.genus, "genus for --random");
    c_hee->add_option("--seed", hee.seed, "random seed");
    c_hee->add_option("--p", hee.p, "odd prime");
    c_hee->callback([&] { run = [&] { return cmd_heegaard(hee); }; });

    LiftOpts lif;
    auto *c_lift = app.add_subcommand("lift", "check twist-power lifts of congruence generators");
    c_lift->add_option("--i", lif.i, "index i");
    c_lift->add_option("--j", lif.j, "index j");
    c_lift->add_option("--genus", lif.genus, "genus");
    c_lift->add_option("--p", lif.p, "odd prime");
    c_lift->callback([&] { run = [&] { return cmd_lift(lif); }; });

    SelftestOpts st;
    auto *c_st = app.add_subcommand("selftest", "run the acceptance criteria");
    c_st->add_option("--suite", st.suite, "all, or a list of criterion numbers such as 1,4,9");
    c_st->add_option("--seed", st.seed, "random seed");
    c_st->callback([&] { run = [&] { return cmd_selftest(st); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        return emit_error("ParseError", e.what(), exit_parse);
    }

    try {
        return emit(run());
    } catch (const ParseError &e) {
        return emit_error(e.kind(), e.what(), exit_parse);
    } catch (const InvalidGenerator &e) {
        return emit_error(e.kind(), e.what(), exit_parse);
    } catch (const NotInFiltration &e) {
        return emit_error(e.kind(), e.what(), exit_not_in_filtration);
    } catch (const NotQHSAtP &e) {
        return emit_error(e.kind(), e.what(), exit_not_qhs);
    } catch (const Error &e) {
        return emit_error(e.kind(), e.what(), exit_error);
    } catch (const json::exception &e) {
        return emit_error("ParseError", e.what(), exit_parse);
    } catch (const std::exception &e) {
        return emit_error("Error", e.what(), exit_error);
    }
}
