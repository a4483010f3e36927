#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

class StandardYoungTableau {
public:
    using Rows = std::vector<std::vector<int>>;

    StandardYoungTableau() = default;
    // Throws unless rows and columns increase, the shape is a partition and the fillings are 1..n.
    explicit StandardYoungTableau(Rows rows);
    // "135/24/6"; entries above 9 are comma separated within a row.
    static StandardYoungTableau parse(std::string_view text);
    static bool is_valid(const Rows& rows);

    const Rows& rows() const { return rows_; }
    int size() const;
    std::vector<int> shape() const;
    // i such that i+1 sits in a lower row than i.
    std::vector<int> descent_set() const;
    StandardYoungTableau transpose() const;
    std::string str() const;
    // One row per line.
    std::string pretty() const;
    bool operator==(const StandardYoungTableau&) const = default;

private:
    Rows rows_;
};

struct RskPair {
    StandardYoungTableau p, q;
};

RskPair rsk(const Permutation& s);
Permutation inverse_rsk(const StandardYoungTableau& p, const StandardYoungTableau& q);

StandardYoungTableau rsk_involution(const Permutation& iota);
Permutation syt_to_involution(const StandardYoungTableau& t);

// SYT of hat + (i, n) from the SYT of hat (size n-2): shift fillings >= i, row-insert i ending in
// row r, then put n at the end of row r+1.
StandardYoungTableau beissinger_insert(const StandardYoungTableau& t, int i, int n);

// Transposes the tableau pair; I_n(321) <-> I_n(123) and S_n(123) <-> S_n(321).
Permutation transpose_map_involution(const Permutation& iota);
Permutation transpose_map_perm(const Permutation& s);

}  // namespace permstat
