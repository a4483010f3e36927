#pragma once

#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

enum class ABVariant { A, B };

// Sequences (a_1..a_l) of positive integers with a_1 <= m; after a run of r ones following
// a_i != 1 the next entry is at most a_i + r (at most m + r if the run starts the sequence).
// B additionally forbids a_1 = 1, and B_{1,l} is empty.
bool in_A(int m, const std::vector<int>& a);
bool in_B(int m, const std::vector<int>& a);
std::vector<std::vector<int>> enumerate_AB(int m, int l, ABVariant variant);

// iota = tau + (a_1, m+2) + ... + (a_l, m+2l) with tau = 12[d_{m-1}, 1] (m > 1) or tau = d_m.
struct CycleInsertionSeq {
    enum class Kind { DecreasingThenFixed, Decreasing };
    Kind kind = Kind::Decreasing;
    int m = 0;
    std::vector<int> a;
    bool operator==(const CycleInsertionSeq&) const = default;
};

CycleInsertionSeq decompose_123(const Permutation& iota);
Permutation rebuild_123(const CycleInsertionSeq& seq);

// Two-cycle count; for 321-avoiders inv is sum of t_i - s_i over the cycles.
int two_cycle_count(const Permutation& iota);
std::uint64_t inv_from_two_cycles(const Permutation& iota);

}  // namespace permstat
