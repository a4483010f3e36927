#pragma once

// Conversions between the reference types in brute.hpp and library values.

#include <string>
#include <vector>

#include "brute.hpp"
#include "permstat/permutation.hpp"
#include "permstat/poly.hpp"

namespace bridge {

inline permstat::Permutation perm(const brute::Word& w) { return permstat::Permutation(w); }
inline permstat::Permutation P(const std::string& s) { return permstat::Permutation::parse(s); }

inline permstat::MultiPoly from_q(const brute::QPoly& q) {
    permstat::MultiPoly out;
    for (auto [e, c] : q) out.add_term({0, static_cast<std::uint32_t>(e), 0}, c);
    return out;
}

inline permstat::MultiPoly from_joint(const brute::JointPoly& j) {
    permstat::MultiPoly out;
    for (auto& [k, c] : j)
        out.add_term({static_cast<std::uint32_t>(std::get<0>(k)), static_cast<std::uint32_t>(std::get<1>(k)),
                      static_cast<std::uint32_t>(std::get<2>(k))},
                     c);
    return out;
}

inline std::vector<brute::Word> words(const std::vector<std::string>& pats) {
    std::vector<brute::Word> out;
    for (auto& p : pats) out.push_back(brute::word(p));
    return out;
}

}  // namespace bridge
