#include "permstat/involution123.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace permstat {

bool in_A(int m, const std::vector<int>& a) {
    if (m < 1) return false;
    int cap = m;
    for (int x : a) {
        if (x < 1 || x > cap) return false;
        cap = x == 1 ? cap + 1 : x;
    }
    return true;
}

bool in_B(int m, const std::vector<int>& a) {
    if (m <= 1) return false;
    if (!a.empty() && a.front() == 1) return false;
    return in_A(m, a);
}

std::vector<std::vector<int>> enumerate_AB(int m, int l, ABVariant variant) {
    if (m < 1 || l < 0) throw std::invalid_argument("enumerate_AB: need m >= 1 and l >= 0");
    std::vector<std::vector<int>> out;
    if (variant == ABVariant::B && m == 1) return out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int cap) {
        if (static_cast<int>(cur.size()) == l) {
            out.push_back(cur);
            return;
        }
        const int lo = variant == ABVariant::B && cur.empty() ? 2 : 1;
        for (int x = lo; x <= cap; ++x) {
            cur.push_back(x);
            rec(x == 1 ? cap + 1 : x);
            cur.pop_back();
        }
    };
    rec(m);
    return out;
}

namespace {

bool has_ascent(const Permutation& s) {
    for (int i = 1; i < s.size(); ++i)
        if (s(i) < s(i + 1)) return true;
    return false;
}

}  // namespace

CycleInsertionSeq decompose_123(const Permutation& iota) {
    if (!iota.is_involution()) throw std::invalid_argument("decompose_123: " + iota.str() + " is not an involution");
    if (contains(iota, Permutation{1, 2, 3})) throw std::invalid_argument("decompose_123: " + iota.str() + " contains 123");
    Permutation tau = iota;
    std::vector<int> pulled;
    CycleInsertionSeq out;
    for (;;) {
        const int n = tau.size();
        if (!has_ascent(tau)) {
            out.kind = CycleInsertionSeq::Kind::Decreasing;
            break;
        }
        if (tau(n) == n) {
            out.kind = CycleInsertionSeq::Kind::DecreasingThenFixed;
            break;
        }
        pulled.push_back(tau(n));
        tau = remove_two_cycle(tau, n);
    }
    out.m = tau.size();
    out.a.assign(pulled.rbegin(), pulled.rend());
    return out;
}

Permutation rebuild_123(const CycleInsertionSeq& seq) {
    Permutation tau;
    if (seq.kind == CycleInsertionSeq::Kind::DecreasingThenFixed) {
        if (seq.m < 2 || !in_A(seq.m, seq.a)) throw std::invalid_argument("rebuild_123: sequence is not in A_{m,l}");
        tau = direct_sum(Permutation::decreasing(seq.m - 1), Permutation{1});
    } else {
        // d_0 only carries the empty sequence
        const bool ok = seq.m == 0 ? seq.a.empty() : in_B(seq.m + 1, seq.a);
        if (seq.m < 0 || !ok) throw std::invalid_argument("rebuild_123: sequence is not in B_{m+1,l}");
        tau = Permutation::decreasing(seq.m);
    }
    for (int x : seq.a) tau = add_two_cycle(tau, x, tau.size() + 2);
    return tau;
}

int two_cycle_count(const Permutation& iota) {
    int moved = 0;
    for (int i = 1; i <= iota.size(); ++i) moved += iota(i) != i;
    return moved / 2;
}

std::uint64_t inv_from_two_cycles(const Permutation& iota) {
    if (!iota.is_involution()) throw std::invalid_argument("inv_from_two_cycles: " + iota.str() + " is not an involution");
    if (contains(iota, Permutation{3, 2, 1})) throw std::invalid_argument("inv_from_two_cycles: " + iota.str() + " contains 321");
    std::uint64_t s = 0;
    for (auto [a, b] : two_cycles(iota).cycles) s += static_cast<std::uint64_t>(b - a);
    return s;
}

}  // namespace permstat
