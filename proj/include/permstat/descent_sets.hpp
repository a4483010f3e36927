#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

// Increasing a_1 < ... < a_l inside [n-1].
struct DescentSubset {
    std::vector<int> elems;
    int n = 0;

    DescentSubset() = default;
    DescentSubset(std::vector<int> e, int ambient);
    // "{2,3,6,8}" or "2,3,6,8"; "{}" is the empty set.
    static DescentSubset parse(std::string_view text, int ambient);
    static DescentSubset of(const Permutation& s);

    // a_i + a_{l-i+1} >= n for all i
    bool in_G() const;
    // a_i + a_{l-i+1} <= n for all i
    bool in_L() const;
    std::string str() const;
    bool operator==(const DescentSubset&) const = default;
};

// Componentwise a_i >= b_i; false when the sizes differ.
bool dominates(const DescentSubset& a, const DescentSubset& b);
// s_i = n - a_{l-i+1}. A is in G_n exactly when A dominates this set.
DescentSubset g_threshold(const DescentSubset& a);

// I_n(213) -> G_n and I_n(132) -> L_n, both by the descent set.
DescentSubset varphi_213(const Permutation& iota);
Permutation varphi_213_inv(const DescentSubset& a);
DescentSubset psi_132(const Permutation& iota);
Permutation psi_132_inv(const DescentSubset& a);
// [n-1] \ A; swaps G_n and L_n.
DescentSubset f_complement(const DescentSubset& a);

// psi^{-1} . f . varphi : I_n(213) -> I_n(132), complementing descent sets.
Permutation map_213_to_132(const Permutation& iota);

}  // namespace permstat
