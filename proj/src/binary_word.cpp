#include "permstat/binary_word.hpp"

#include <algorithm>
#include <stdexcept>

namespace permstat {

BinaryWord::BinaryWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_)
        if (b > 1) throw std::invalid_argument("binary word letters must be 0 or 1");
}

BinaryWord BinaryWord::parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    const bool parens = text.find_first_of("()") != std::string_view::npos;
    for (char c : text) {
        if (parens && (c == '(' || c == ')')) bits.push_back(c == '(' ? 1 : 0);
        else if (!parens && (c == '0' || c == '1')) bits.push_back(static_cast<std::uint8_t>(c - '0'));
        else if (c != ' ') throw std::invalid_argument("bad binary word '" + std::string(text) + "'");
    }
    return BinaryWord(std::move(bits));
}

int BinaryWord::ones() const { return static_cast<int>(std::count(bits_.begin(), bits_.end(), 1)); }

std::vector<int> BinaryWord::descent_set() const {
    std::vector<int> d;
    for (int i = 1; i < size(); ++i)
        if ((*this)(i) == 1 && (*this)(i + 1) == 0) d.push_back(i);
    return d;
}

std::uint64_t BinaryWord::maj() const {
    std::uint64_t s = 0;
    for (int d : descent_set()) s += static_cast<std::uint64_t>(d);
    return s;
}

std::string BinaryWord::str() const {
    std::string s;
    for (auto b : bits_) s += static_cast<char>('0' + b);
    return s;
}

CoreDecomposition core(const BinaryWord& w) {
    CoreDecomposition out;
    std::vector<int> open;
    for (int i = 1; i <= w.size(); ++i) {
        if (w(i) == 1) {
            open.push_back(i);
        } else if (!open.empty()) {
            out.pairing.emplace_back(open.back(), i);
            open.pop_back();
        }
    }
    std::sort(out.pairing.begin(), out.pairing.end());
    std::vector<char> in(static_cast<std::size_t>(w.size()) + 2, 0);
    for (auto [a, b] : out.pairing) in[static_cast<std::size_t>(a)] = in[static_cast<std::size_t>(b)] = 1;
    for (int i = 1; i <= w.size(); ++i)
        if (in[static_cast<std::size_t>(i)]) out.matched.push_back(i);
    // a block ends where the running balance over a matched run returns to zero
    int balance = 0, start = 0;
    for (int i = 1; i <= w.size(); ++i) {
        if (!in[static_cast<std::size_t>(i)]) continue;
        if (balance == 0) start = i;
        balance += w(i) == 1 ? 1 : -1;
        if (balance == 0) out.blocks.emplace_back(start, i);
    }
    return out;
}

std::vector<int> core_by_adjacent_pairs(const BinaryWord& w) {
    // indices still unmatched, in order; repeatedly strike adjacent "10" pairs
    std::vector<int> live;
    for (int i = 1; i <= w.size(); ++i) live.push_back(i);
    std::vector<int> matched;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < live.size(); ++k) {
            if (w(live[k]) == 1 && w(live[k + 1]) == 0) {
                matched.push_back(live[k]);
                matched.push_back(live[k + 1]);
                live.erase(live.begin() + static_cast<std::ptrdiff_t>(k), live.begin() + static_cast<std::ptrdiff_t>(k) + 2);
                changed = true;
                break;
            }
        }
    }
    std::sort(matched.begin(), matched.end());
    return matched;
}

BinaryWord phi_321(const Permutation& iota, int ones) {
    const int n = iota.size();
    const auto tc = two_cycles(iota);
    if (contains(iota, Permutation{3, 2, 1})) throw std::invalid_argument("phi_321: " + iota.str() + " contains 321");
    if (ones < 0) ones = (n + 1) / 2;
    const int m = static_cast<int>(tc.cycles.size());
    const int a1 = ones - m, a0 = n - ones - m;
    if (a1 < 0 || a0 < 0)
        throw std::invalid_argument("phi_321: " + iota.str() + " has " + std::to_string(m) + " two-cycles, too many for " +
                                    std::to_string(ones) + " ones");
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
    for (auto [s, t] : tc.cycles) {
        bits[static_cast<std::size_t>(s - 1)] = 1;
        bits[static_cast<std::size_t>(t - 1)] = 0;
    }
    for (std::size_t f = 0; f < tc.fixed_points.size(); ++f)
        bits[static_cast<std::size_t>(tc.fixed_points[f] - 1)] = static_cast<int>(f) < a0 ? 0 : 1;
    return BinaryWord(std::move(bits));
}

Permutation phi_321_inv(const BinaryWord& w) {
    if (w.ones() > (w.size() + 1) / 2)
        throw std::invalid_argument("phi_321_inv: " + w.str() + " has more than ceil(n/2) ones");
    const auto c = core(w);
    std::vector<int> ones, zeros;
    for (int i : c.matched) (w(i) == 1 ? ones : zeros).push_back(i);
    std::vector<int> word(static_cast<std::size_t>(w.size()));
    for (int i = 1; i <= w.size(); ++i) word[static_cast<std::size_t>(i - 1)] = i;
    for (std::size_t r = 0; r < ones.size(); ++r) {
        word[static_cast<std::size_t>(ones[r] - 1)] = zeros[r];
        word[static_cast<std::size_t>(zeros[r] - 1)] = ones[r];
    }
    return Permutation(std::move(word));
}

}  // namespace permstat
