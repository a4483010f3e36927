#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permstat/oracle.hpp"

namespace permstat {

// Exhaustive round-trip and statistic-transport sweep of one bijection at one size.
struct BijectionCheck {
    std::string name;
    int n = 0;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::string first_failure;  // input and what went wrong
    bool ok() const { return failures == 0; }
};

// phi321, transpose-inv, transpose-perm, desc213, theta, beissinger, rsk-involution, star-split, core, decompose123
const std::vector<std::string>& bijection_names();
BijectionCheck verify_bijection(const std::string& name, int n, ParallelOptions par = {});

// Applies the named map to the text form of one input: a permutation, a binary word, or for
// "varphi-inv"/"psi-inv" a subset, with n taken from `ambient`.
std::string run_bijection(const std::string& name, const std::string& input, int ambient = -1);
const std::vector<std::string>& runnable_bijections();

}  // namespace permstat
