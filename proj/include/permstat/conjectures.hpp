#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permstat/oracle.hpp"
#include "permstat/permutation.hpp"
#include "permstat/poly.hpp"

namespace permstat {

// Two pattern sets and the first n where the claim broke, with both sides as computed.
struct Witness {
    std::string left, right;
    int n = 0;
    MultiPoly left_poly, right_poly;
};

struct ConjectureCell {
    std::string label;
    bool holds = true;
    bool proven = false;  // the cell is a theorem, so failure is a hard error
    std::string note;
    std::optional<Witness> witness;
};

struct ConjectureReport {
    std::string id;
    std::string grid;
    std::vector<ConjectureCell> cells;
    std::optional<double> seconds;  // only filled when timing is requested

    bool holds() const;
    bool proven_cells_hold() const;
    std::string human() const;
};

struct ConjectureOptions {
    Caps caps;
    ParallelOptions par;
};

// The II-Wilf class of pi is {pi, r1 pi, r_{-1} pi, R180 pi}, for every pattern length up to max_len.
ConjectureReport check_ii_wilf_symmetry_classes(int max_len, int n_max, const ConjectureOptions& opt = {});
// 12[231,231] and 12[312,231] have different II_n.
ConjectureReport check_ii_wilf_separation(int n, const ConjectureOptions& opt = {});
// The MI-Wilf class of pi is {pi, r1 pi}.
ConjectureReport check_mi_wilf_classes(int max_len, int n_max, const ConjectureOptions& opt = {});

std::pair<Permutation, Permutation> symmetry_pair(int k, int m);
// maj genfun of pi1 equals q^{binom(n,2)} times that of pi2 at 1/q, over S_n or I_n.
ConjectureReport check_symmetry_pair(int k, int m, int n_max, Population pop, const ConjectureOptions& opt = {});
// Every (m, k) with 0 <= k < m <= m_max.
ConjectureReport check_symmetry_pairs(int m_max, int n_max, Population pop, const ConjectureOptions& opt = {});

// 132[i_m,1,d_k] vs 231[i_m,1,d_k] and 213[d_m,1,i_k] vs 312[d_m,1,i_k], maj over S_n.
ConjectureReport check_dokos_pairs(int m_max, int k_max, int n_max, const ConjectureOptions& opt = {});
// Exploratory: which patterns pi of length <= max_len satisfy M_n(pi) = q^{binom(n,2)} M_n(r0 pi; 1/q).
ConjectureReport explore_r0_pairs(int max_len, int n_max, Population pop, const ConjectureOptions& opt = {});

struct ConjectureGrid {
    int max_len = 4;
    int n_max = -1;  // -1: the default for the conjecture
    int m_max = 8;
    int k_max = 3;
    int k = -1;      // single symmetry pair when >= 0, with m = m_max
};

// ids: ii-wilf, ii-wilf-separation, mi-wilf, conj, conj-invo, dokos, r0-pairs
ConjectureReport run_conjecture(const std::string& id, const ConjectureGrid& grid, const ConjectureOptions& opt = {});
const std::vector<std::string>& conjecture_ids();

}  // namespace permstat
