#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permstat {

inline constexpr int kMaxLength = 64;

// Bit i is set when i belongs to the set (positions 1..63).
using PositionSet = std::uint64_t;

std::vector<int> positions(PositionSet s);
PositionSet make_position_set(std::span<const int> elems);

// One-line notation, 1-indexed. The default value is the empty permutation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);
    Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}

    static Permutation identity(int n);
    static Permutation decreasing(int n);
    // Accepts "216543", "10,2,3,...", "" or "e" for the empty permutation.
    static Permutation parse(std::string_view text);
    // Order-isomorphic standardization of an arbitrary sequence of distinct integers.
    static Permutation standardize(std::span<const int> values);

    int size() const { return static_cast<int>(w_.size()); }
    bool empty() const { return w_.empty(); }
    int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& word() const { return w_; }

    bool is_involution() const;
    std::string str() const;

    auto operator<=>(const Permutation&) const = default;
    bool operator==(const Permutation&) const = default;

private:
    friend class PermutationEditor;
    std::vector<int> w_;
};

// Grants the enumerators in-place access so that streaming does not allocate per member.
class PermutationEditor {
public:
    static std::vector<int>& word(Permutation& p) { return p.w_; }
};

struct StatBundle {
    std::uint64_t inv = 0, coinv = 0, maj = 0, comaj = 0, des = 0, asc = 0;
    PositionSet des_set = 0, asc_set = 0;
};

StatBundle stats(const Permutation& s);
std::uint64_t inv(const Permutation& s);
std::uint64_t maj(const Permutation& s);
PositionSet descent_set(const Permutation& s);
PositionSet ascent_set(const Permutation& s);

bool contains(const Permutation& s, const Permutation& pattern);
// Backtracking search, any pattern length.
bool contains_generic(const Permutation& s, const Permutation& pattern);
// O(n^2) scan, patterns of length at most 3.
bool contains_short(const Permutation& s, const Permutation& pattern);
bool avoids_all(const Permutation& s, std::span<const Permutation> patterns);

std::vector<Permutation> parse_pattern_list(std::string_view text);
std::string format_pattern_list(std::span<const Permutation> patterns);

enum class Symmetry { R0, R90, R180, R270, r1, r_1, r0, r_inf };
inline constexpr Symmetry kAllSymmetries[] = {Symmetry::R0,  Symmetry::R90, Symmetry::R180, Symmetry::R270,
                                              Symmetry::r1,  Symmetry::r_1, Symmetry::r0,   Symmetry::r_inf};

Permutation inverse(const Permutation& s);
Permutation reverse(const Permutation& s);
Permutation complement(const Permutation& s);
Permutation apply(Symmetry g, const Permutation& s);
std::string_view symmetry_name(Symmetry g);
std::optional<Symmetry> parse_symmetry(std::string_view name);

Permutation inflate(const Permutation& tau, std::span<const Permutation> blocks);
Permutation direct_sum(const Permutation& a, const Permutation& b);  // 12[a,b]
Permutation skew_sum(const Permutation& a, const Permutation& b);    // 21[a,b]

struct TwoCycleList {
    std::vector<std::pair<int, int>> cycles;
    std::vector<int> fixed_points;
    bool operator==(const TwoCycleList&) const = default;
};

TwoCycleList two_cycles(const Permutation& iota);

// iota-hat + (i, j): open slots i < j in a word of length |hat|+2, pair them, keep the rest order-isomorphic.
Permutation add_two_cycle(const Permutation& hat, int i, int j);
// Removes the two-cycle (i, iota(i)) and standardizes.
Permutation remove_two_cycle(const Permutation& iota, int i);
// Deletes the point at position i and standardizes.
Permutation remove_point(const Permutation& s, int i);
// Inserts a new point at position i with value v; later positions and values >= v shift up.
Permutation insert_point(const Permutation& s, int i, int v);

struct Point {
    int index = 0;
    int value = 0;
    bool operator==(const Point&) const = default;
};

struct Landmarks {
    std::vector<Point> lr_max;
    std::vector<Point> rl_min;
    std::vector<Point> rl_max;
};

Landmarks landmark_subsequences(const Permutation& s);

// For shape one of 231, 312, 132, 213: s = shape[s1, 1, s2] with the singleton at the extreme value.
std::optional<std::pair<Permutation, Permutation>> three_block_split(const Permutation& s, const Permutation& shape);

}  // namespace permstat
