#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mapclass.hpp"
#include "symplectic.hpp"

namespace johnsonlab {

struct LiftReport {
    int i = 1;
    int j = 1;
    std::uint32_t p = 3;
    int g = 1;
    std::string m_expression; // mapping class projecting to gen_M(i, j, p)
    std::string n_expression; // mapping class projecting to gen_N(i, j, p)
    IntMatrix m_image;
    IntMatrix n_image;
    bool m_match = false;
    bool n_match = false;
    std::vector<std::string> mismatches;

    bool ok() const { return m_match && n_match; }
};

// Checks that products of p-th twist powers project to the generators M_ij and N_ij.
// Off the diagonal: T_{a_i}^-p T_{a_i+a_j}^p T_{a_j}^-p and T_{b_i}^-p T_{b_i-b_j}^p T_{b_j}^-p;
// on the diagonal: T_{a_i}^p and T_{b_i}^-p.
inline LiftReport lift_generator_check(int i, int j, std::uint32_t p, Rank rank)
{
    require_odd_prime(p);
    check_pair(i, j, rank.g);
    LiftReport r;
    r.i = i;
    r.j = j;
    r.p = p;
    r.g = rank.g;
    const std::string P = std::to_string(p);
    const std::string si = std::to_string(i), sj = std::to_string(j);
    if (i == j) {
        r.m_expression = "Ta" + si + "^" + P;
        r.n_expression = "Tb" + si + "^-" + P;
    } else {
        const std::string lo = std::to_string(std::min(i, j)), hi = std::to_string(std::max(i, j));
        r.m_expression = "Ta" + si + "^-" + P + "*Taa" + lo + "_" + hi + "^" + P + "*Ta" + sj + "^-" + P;
        r.n_expression = "Tb" + si + "^-" + P + "*Tbd" + lo + "_" + hi + "^" + P + "*Tb" + sj + "^-" + P;
    }
    r.m_image = symplectic_rep(parse_map_expression(r.m_expression, rank));
    r.n_image = symplectic_rep(parse_map_expression(r.n_expression, rank));
    r.m_match = r.m_image == gen_M(i, j, p, rank.g);
    r.n_match = r.n_image == gen_N(i, j, p, rank.g);
    if (!r.m_match) r.mismatches.push_back("M(" + si + "," + sj + ")");
    if (!r.n_match) r.mismatches.push_back("N(" + si + "," + sj + ")");
    return r;
}

} // namespace johnsonlab
