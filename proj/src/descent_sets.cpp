#include "permstat/descent_sets.hpp"

#include <algorithm>
#include <stdexcept>

namespace permstat {

DescentSubset::DescentSubset(std::vector<int> e, int ambient) : elems(std::move(e)), n(ambient) {
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (elems[i] < 1 || elems[i] > n - 1) throw std::invalid_argument("descent subset element out of [n-1]");
        if (i && elems[i] <= elems[i - 1]) throw std::invalid_argument("descent subset must be strictly increasing");
    }
}

DescentSubset DescentSubset::parse(std::string_view text, int ambient) {
    std::vector<int> e;
    int cur = -1;
    for (char c : text) {
        if (c >= '0' && c <= '9') {
            cur = (cur < 0 ? 0 : cur * 10) + (c - '0');
        } else if (c == ',' || c == '}' || c == ' ') {
            if (cur >= 0) e.push_back(cur);
            cur = -1;
        } else if (c != '{') {
            throw std::invalid_argument("bad subset '" + std::string(text) + "'");
        }
    }
    if (cur >= 0) e.push_back(cur);
    std::sort(e.begin(), e.end());
    return DescentSubset(std::move(e), ambient);
}

DescentSubset DescentSubset::of(const Permutation& s) { return DescentSubset(positions(descent_set(s)), s.size()); }

bool DescentSubset::in_G() const {
    const std::size_t l = elems.size();
    for (std::size_t i = 0; i < l; ++i)
        if (elems[i] + elems[l - 1 - i] < n) return false;
    return true;
}

bool DescentSubset::in_L() const {
    const std::size_t l = elems.size();
    for (std::size_t i = 0; i < l; ++i)
        if (elems[i] + elems[l - 1 - i] > n) return false;
    return true;
}

std::string DescentSubset::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(elems[i]);
    }
    return s + "}";
}

bool dominates(const DescentSubset& a, const DescentSubset& b) {
    if (a.elems.size() != b.elems.size()) return false;
    for (std::size_t i = 0; i < a.elems.size(); ++i)
        if (a.elems[i] < b.elems[i]) return false;
    return true;
}

DescentSubset g_threshold(const DescentSubset& a) {
    // not necessarily inside [n-1] when a is far from G_n, so skip validation
    DescentSubset s;
    s.n = a.n;
    for (auto it = a.elems.rbegin(); it != a.elems.rend(); ++it) s.elems.push_back(a.n - *it);
    return s;
}

namespace {

void require_avoiding_involution(const Permutation& iota, const Permutation& pattern, const char* who) {
    if (!iota.is_involution()) throw std::invalid_argument(std::string(who) + ": " + iota.str() + " is not an involution");
    if (contains(iota, pattern))
        throw std::invalid_argument(std::string(who) + ": " + iota.str() + " contains " + pattern.str());
}

Permutation varphi_inv_rec(const std::vector<int>& a, int n) {
    if (a.empty()) return Permutation::identity(n);
    const int lo = a.front();
    std::vector<int> hat;
    const bool top = a.back() == n - 1;
    for (int x : a)
        if (!(top && (x == lo || x == n - 1))) hat.push_back(x - 1);
    return add_two_cycle(varphi_inv_rec(hat, n - 2), lo, n);
}

Permutation psi_inv_rec(const std::vector<int>& a, int n) {
    if (a.empty()) return Permutation::identity(n);
    const int hi = a.back();
    std::vector<int> hat;
    const bool bottom = a.front() == 1;
    for (int x : a)
        if (!(bottom && (x == 1 || x == hi))) hat.push_back(x - 1);
    return add_two_cycle(psi_inv_rec(hat, n - 2), 1, hi + 1);
}

}  // namespace

DescentSubset varphi_213(const Permutation& iota) {
    require_avoiding_involution(iota, Permutation{2, 1, 3}, "varphi_213");
    return DescentSubset::of(iota);
}

Permutation varphi_213_inv(const DescentSubset& a) {
    if (!a.in_G()) throw std::invalid_argument("varphi_213_inv: " + a.str() + " is not in G_" + std::to_string(a.n));
    return varphi_inv_rec(a.elems, a.n);
}

DescentSubset psi_132(const Permutation& iota) {
    require_avoiding_involution(iota, Permutation{1, 3, 2}, "psi_132");
    return DescentSubset::of(iota);
}

Permutation psi_132_inv(const DescentSubset& a) {
    if (!a.in_L()) throw std::invalid_argument("psi_132_inv: " + a.str() + " is not in L_" + std::to_string(a.n));
    return psi_inv_rec(a.elems, a.n);
}

DescentSubset f_complement(const DescentSubset& a) {
    std::vector<int> c;
    std::size_t j = 0;
    for (int i = 1; i < a.n; ++i) {
        if (j < a.elems.size() && a.elems[j] == i) ++j;
        else c.push_back(i);
    }
    return DescentSubset(std::move(c), a.n);
}

Permutation map_213_to_132(const Permutation& iota) { return psi_132_inv(f_complement(varphi_213(iota))); }

}  // namespace permstat
