#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

// 0/1 word, read left to right, 1-indexed.
class BinaryWord {
public:
    BinaryWord() = default;
    explicit BinaryWord(std::vector<std::uint8_t> bits);
    // "0101..." or parentheses with "(" = 1 and ")" = 0.
    static BinaryWord parse(std::string_view text);

    int size() const { return static_cast<int>(bits_.size()); }
    int operator()(int i) const { return bits_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }
    int ones() const;
    std::vector<int> descent_set() const;  // i with w_i = 1, w_{i+1} = 0
    std::uint64_t maj() const;
    std::string str() const;
    bool operator==(const BinaryWord&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

struct CoreDecomposition {
    std::vector<int> matched;                  // sorted core indices
    std::vector<std::pair<int, int>> pairing;  // (index of a 1, index of its 0), sorted by the 1
    std::vector<std::pair<int, int>> blocks;   // maximal balanced intervals [lo, hi], not splittable
};

// Stack matching of 1s (open) with 0s (close); equals the fixed point of repeatedly matching adjacent
// unmatched "10" pairs.
CoreDecomposition core(const BinaryWord& w);
// The literal iterate-adjacent-pairs definition, kept as an independent check.
std::vector<int> core_by_adjacent_pairs(const BinaryWord& w);

// iota in I_n(321) -> word with `ones` ones (default ceil(n/2)); two-cycle (s,t) gives w_s = 1, w_t = 0
// and the fixed points read 0^{a0} 1^{a1}.
BinaryWord phi_321(const Permutation& iota, int ones = -1);
// Pairs the i-th core 1 with the i-th core 0.
Permutation phi_321_inv(const BinaryWord& w);

}  // namespace permstat
