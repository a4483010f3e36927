#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

// x * y: start from 21[x, y] and sort the values on the right-to-left minima of x together with the
// left-to-right maxima of the y block, so that those points form an increasing run.
Permutation star_product(const Permutation& x, const Permutation& y);

// sigma * 1, for sigma avoiding 213. Splits at the smallest 21-decomposition; the result does not
// depend on that choice.
Permutation star1_extend(const Permutation& sigma);

// S_n(132) -> S_n(213) with Asc(sigma) = Des(theta(sigma)).
Permutation theta(const Permutation& sigma);
Permutation theta_inv(const Permutation& sigma);

struct RLMaxProfile {
    std::vector<Point> maxima;     // right-to-left maxima, left to right
    std::vector<int> u, v, p;      // index gaps, value gaps (last one down to 0), points weakly left-below
};

RLMaxProfile rl_max_profile(const Permutation& sigma);

// sigma = x * y using the smallest j with u_j + v_j >= p_j + 2 and k = p_j - u_j + 1.
std::optional<std::pair<Permutation, Permutation>> split_star(const Permutation& sigma);
// sigma = z * 1 when no *-split exists.
std::optional<Permutation> split_star1(const Permutation& sigma);

}  // namespace permstat
