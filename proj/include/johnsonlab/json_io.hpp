#pragma once

// JSON encodings; requires nlohmann/json (vendor/json.hpp) on the include path.

#include <string>
#include <vector>

#include <json.hpp>

#include "filtrations.hpp"
#include "johnson.hpp"
#include "lift.hpp"
#include "mapclass.hpp"
#include "symplectic.hpp"

namespace johnsonlab::json_io {

using json = nlohmann::ordered_json;

inline json ring(const CoefficientRing &r)
{
    if (r.is_integers()) return {{"kind", "integers"}};
    return {{"kind", "prime_field"}, {"p", r.p}};
}

inline CoefficientRing ring_from(const json &j)
{
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "integers") return CoefficientRing::integers();
    if (kind == "prime_field") return CoefficientRing::prime_field(j.at("p").get<std::uint64_t>());
    throw ParseError("unknown ring kind '" + kind + "'");
}

inline std::string word(const Word &w) { return to_string(w); }

inline json monomial(const Monomial &m) { return m.vars; }

template <class R>
json series(const TruncatedSeries<R> &s)
{
    json terms = json::array();
    for (const auto &[m, c] : s.terms()) terms.push_back({{"monomial", monomial(m)}, {"coeff", s.ring().format(c)}});
    return {{"truncation", s.truncation()}, {"ring", ring(s.ring().descriptor())}, {"terms", terms}};
}

template <class R>
json group_ring(const GroupRingElement<R> &e)
{
    json terms = json::array();
    for (const auto &[w, c] : e.terms()) terms.push_back({{"word", word(w)}, {"coeff", e.ring().format(c)}});
    return {{"ring", ring(e.ring().descriptor())}, {"terms", terms}};
}

inline json words(const std::vector<Word> &ws)
{
    json a = json::array();
    for (const Word &w : ws) a.push_back(word(w));
    return a;
}

// "rank" carries the genus g; the free group has 2g generators.
inline json mapping_class(const FreeAutomorphism &f)
{
    return {{"rank", f.rank().g},
            {"images", words(f.images())},
            {"inverse_images", words(f.inverse_images())},
            {"label", f.label()}};
}

// Parses and validates a raw mapping class (inverse images and boundary word are checked).
inline FreeAutomorphism mapping_class_from(const json &j)
{
    const Rank rank(j.at("rank").get<int>());
    std::vector<Word> img, inv;
    for (const auto &w : j.at("images")) img.push_back(parse_word(w.get<std::string>(), rank.g));
    for (const auto &w : j.at("inverse_images")) inv.push_back(parse_word(w.get<std::string>(), rank.g));
    FreeAutomorphism f(rank, img, inv, j.value("label", std::string("json")));
    if (!f.inverse_consistent()) throw InvariantViolation("inverse_images do not invert images");
    if (!f.fixes_boundary()) throw InvariantViolation("mapping class does not fix the boundary word");
    return f;
}

template <class T>
json matrix_entries(const Matrix<T> &m)
{
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) {
            if constexpr (std::is_same_v<T, Integer>)
                row.push_back(m(i, j).str());
            else
                row.push_back(std::to_string(m(i, j)));
        }
        rows.push_back(row);
    }
    return rows;
}

inline json matrix(const IntMatrix &m) { return {{"g", m.rows / 2}, {"ring", ring(CoefficientRing::integers())}, {"entries", matrix_entries(m)}}; }

inline json matrix(const ModMatrix &m, std::uint32_t p)
{
    return {{"g", m.rows / 2}, {"ring", ring(CoefficientRing::prime_field(p))}, {"entries", matrix_entries(reduce_mod(m, p))}};
}

inline Integer integer_from(const json &v)
{
    if (v.is_number_integer()) return Integer(v.get<long long>());
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos) throw ParseError("bad integer '" + s + "'");
        return Integer(s);
    }
    throw ParseError("matrix entries must be integers or decimal strings");
}

// Accepts {g, ring?, entries} or a bare array of rows.
inline IntMatrix int_matrix_from(const json &j)
{
    const json &rows = j.is_array() ? j : j.at("entries");
    const int n = static_cast<int>(rows.size());
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) throw ParseError("matrix must be square");
        for (int c = 0; c < n; ++c) m(i, c) = integer_from(rows[i][c]);
    }
    if (j.is_object() && j.contains("g") && j.at("g").get<int>() * 2 != n) throw ParseError("matrix size does not match g");
    return m;
}

inline json member_report(const MembershipReport &r)
{
    json j = {{"series", r.series.name()}, {"depth", r.depth}};
    j["p"] = r.series.kind == SeriesKind::Kind::LCS ? json(nullptr) : json(r.series.p);
    j["verdict"] = to_string(r.verdict);
    if (r.witness) j["witness_monomial"] = monomial(*r.witness);
    return j;
}

inline json l2s(const L2SImage &img)
{
    json wedge = json::array();
    for (std::size_t q = 0; q < img.wedge.size(); ++q)
        if (img.wedge[q]) {
            auto [a, b] = pair_at(q, img.n);
            wedge.push_back({{"pair", {a, b}}, {"coeff", std::to_string(img.wedge[q])}});
        }
    json linear = json::array();
    for (auto c : img.linear) linear.push_back(std::to_string(c));
    return {{"p", img.p}, {"wedge", wedge}, {"linear", linear}};
}

inline json wedge3(const Wedge3Result &w, int n)
{
    json j = {{"member", w.member}};
    if (w.member) {
        json coords = json::array();
        const auto tri = triples(n);
        for (std::size_t t = 0; t < tri.size(); ++t)
            if (w.coordinates[t])
                coords.push_back({{"triple", {tri[t][0], tri[t][1], tri[t][2]}}, {"coeff", std::to_string(w.coordinates[t])}});
        j["coordinates"] = coords;
    } else {
        j["reason"] = w.reason;
        if (!w.certificate.empty()) {
            json cert = json::array();
            for (auto c : w.certificate) cert.push_back(std::to_string(c));
            j["certificate"] = cert;
        }
    }
    return j;
}

inline json johnson_value(const JohnsonValue &v)
{
    json rows = json::array();
    for (int i = 0; i < v.n; ++i) {
        json terms = json::array();
        const auto &r = v.rows[i];
        for (std::size_t m = 0; m < r.size(); ++m)
            if (r[m] != 0) terms.push_back({{"monomial", monomial(Monomial::from_index(m, v.level + 1, v.n))}, {"coeff", r[m].str()}});
        rows.push_back({{"generator", "x" + std::to_string(i + 1)}, {"terms", terms}});
    }
    return {{"level", v.level}, {"ring", ring(v.ring)}, {"rows", rows}};
}

inline json tau1_s(const Tau1SValue &v)
{
    json cols = json::array();
    for (int i = 0; i < v.n; ++i) {
        json c = l2s(v.columns[i]);
        c["generator"] = "x" + std::to_string(i + 1);
        cols.push_back(c);
    }
    return {{"level", 1}, {"ring", ring(CoefficientRing::prime_field(v.p))}, {"columns", cols}, {"sp_part", matrix(v.sp_part, v.p)}};
}

inline json heegaard(const HeegaardReduction &h)
{
    return {{"X", matrix(h.X)},
            {"Y", matrix(reduce_mod(h.Y, h.p), h.p)},
            {"residual", matrix(h.residual, h.p)},
            {"B_prime", matrix_entries(h.b_prime)},
            {"inverse_blocks_source", "M^-1 mod p"},
            {"checks",
             {{"residual_identity", h.residual_identity},
              {"b_prime_symmetric", h.b_prime_symmetric},
              {"x_symplectic", h.x_symplectic},
              {"y_symplectic_mod_p", h.y_symplectic},
              {"residual_symplectic_mod_p", h.residual_symplectic},
              {"y_lower_left_zero", h.y_lower_left_zero},
              {"y_upper_right_zero", h.y_upper_right_zero}}},
            {"preserves", {{"X", h.x_preserves}, {"Y", h.y_preserves}}}};
}

inline json lift(const LiftReport &r)
{
    return {{"i", r.i},
            {"j", r.j},
            {"p", r.p},
            {"g", r.g},
            {"M", {{"expression", r.m_expression}, {"image", matrix(r.m_image)}, {"match", r.m_match}}},
            {"N", {{"expression", r.n_expression}, {"image", matrix(r.n_image)}, {"match", r.n_match}}},
            {"mismatches", r.mismatches}};
}

inline json envelope(const std::string &status, json data, json diagnostics = json::array())
{
    return {{"status", status}, {"data", std::move(data)}, {"diagnostics", std::move(diagnostics)}};
}

} // namespace johnsonlab::json_io
