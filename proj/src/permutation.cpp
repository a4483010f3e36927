#include "permstat/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace permstat {

std::vector<int> positions(PositionSet s) {
    std::vector<int> out;
    for (int i = 1; i < 64; ++i)
        if (s >> i & 1U) out.push_back(i);
    return out;
}

PositionSet make_position_set(std::span<const int> elems) {
    PositionSet s = 0;
    for (int e : elems) {
        if (e < 1 || e > 63) throw std::invalid_argument("position out of range: " + std::to_string(e));
        s |= PositionSet{1} << e;
    }
    return s;
}

Permutation::Permutation(std::vector<int> word) : w_(std::move(word)) {
    const int n = size();
    if (n > kMaxLength) throw std::invalid_argument("permutation longer than 64");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : w_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::decreasing(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty() || text == "e" || text == "\xce\xb5") return {};
    std::vector<int> w;
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find(',', start);
            if (end == std::string_view::npos) end = text.size();
            auto item = trim(text.substr(start, end - start));
            if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw std::invalid_argument("bad permutation text: '" + std::string(text) + "'");
            w.push_back(std::stoi(std::string(item)));
            start = end + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw std::invalid_argument("bad permutation text: '" + std::string(text) + "'");
            w.push_back(c - '0');
        }
    }
    try {
        return Permutation(std::move(w));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a permutation: '" + std::string(text) + "'");
    }
}

Permutation Permutation::standardize(std::span<const int> values) {
    std::vector<int> idx(values.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return values[static_cast<std::size_t>(a)] < values[static_cast<std::size_t>(b)]; });
    std::vector<int> w(values.size());
    for (std::size_t r = 0; r < idx.size(); ++r) w[static_cast<std::size_t>(idx[r])] = static_cast<int>(r) + 1;
    Permutation p;
    p.w_ = std::move(w);
    return p;
}

bool Permutation::is_involution() const {
    for (int i = 1; i <= size(); ++i)
        if ((*this)((*this)(i)) != i) return false;
    return true;
}

std::string Permutation::str() const {
    std::string out;
    const bool digits = size() <= 9;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (!digits && i > 0) out += ',';
        out += std::to_string(w_[i]);
    }
    return out;
}

StatBundle stats(const Permutation& s) {
    StatBundle b;
    const auto& w = s.word();
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) (w[i] > w[j] ? b.inv : b.coinv) += 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const auto pos = static_cast<std::uint64_t>(i + 1);
        if (w[i] > w[i + 1]) {
            b.des += 1;
            b.maj += pos;
            b.des_set |= PositionSet{1} << pos;
        } else {
            b.asc += 1;
            b.comaj += pos;
            b.asc_set |= PositionSet{1} << pos;
        }
    }
    return b;
}

std::uint64_t inv(const Permutation& s) {
    std::uint64_t c = 0;
    const auto& w = s.word();
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j];
    return c;
}

std::uint64_t maj(const Permutation& s) {
    std::uint64_t c = 0;
    const auto& w = s.word();
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) c += i + 1;
    return c;
}

PositionSet descent_set(const Permutation& s) {
    PositionSet d = 0;
    const auto& w = s.word();
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) d |= PositionSet{1} << (i + 1);
    return d;
}

PositionSet ascent_set(const Permutation& s) {
    PositionSet d = 0;
    const auto& w = s.word();
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) d |= PositionSet{1} << (i + 1);
    return d;
}

namespace {

bool search(const std::vector<int>& w, const std::vector<int>& p, std::vector<int>& chosen, std::size_t j, std::size_t from) {
    const std::size_t k = p.size();
    if (j == k) return true;
    for (std::size_t i = from; i + (k - j) <= w.size(); ++i) {
        bool ok = true;
        for (std::size_t l = 0; l < j && ok; ++l) ok = (p[l] < p[j]) == (chosen[l] < w[i]);
        if (!ok) continue;
        chosen[j] = w[i];
        if (search(w, p, chosen, j + 1, i + 1)) return true;
    }
    return false;
}

}  // namespace

bool contains_generic(const Permutation& s, const Permutation& pattern) {
    if (pattern.size() > s.size()) return false;
    std::vector<int> chosen(static_cast<std::size_t>(pattern.size()));
    return search(s.word(), pattern.word(), chosen, 0, 0);
}

bool contains_short(const Permutation& s, const Permutation& pattern) {
    const int k = pattern.size();
    if (k > 3) throw std::invalid_argument("contains_short needs a pattern of length <= 3");
    const auto& w = s.word();
    const int n = s.size();
    if (k > n) return false;
    if (k <= 1) return true;
    if (k == 2) {
        const bool up = pattern(1) < pattern(2);
        for (int i = 0; i + 1 < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if ((w[static_cast<std::size_t>(i)] < w[static_cast<std::size_t>(j)]) == up) return true;
        return false;
    }
    const int code = pattern(1) * 100 + pattern(2) * 10 + pattern(3);
    auto at = [&](int i) { return w[static_cast<std::size_t>(i)]; };
    for (int j = 1; j + 1 < n; ++j) {
        const int m = at(j);
        switch (code) {
            case 123:
            case 321: {
                bool left = false, right = false;
                for (int i = 0; i < j && !left; ++i) left = code == 123 ? at(i) < m : at(i) > m;
                for (int i = j + 1; i < n && !right; ++i) right = code == 123 ? at(i) > m : at(i) < m;
                if (left && right) return true;
                break;
            }
            case 132:
            case 312: {
                // left extreme (min for 132, max for 312) and a right value strictly between it and m
                int best = code == 132 ? n + 1 : 0;
                for (int i = 0; i < j; ++i) best = code == 132 ? std::min(best, at(i)) : std::max(best, at(i));
                const int lo = code == 132 ? best : m, hi = code == 132 ? m : best;
                if (lo >= hi) break;
                for (int i = j + 1; i < n; ++i)
                    if (at(i) > lo && at(i) < hi) return true;
                break;
            }
            case 231: {
                int best = 0;
                for (int i = 0; i < j; ++i)
                    if (at(i) < m) best = std::max(best, at(i));
                if (best == 0) break;
                for (int i = j + 1; i < n; ++i)
                    if (at(i) < best) return true;
                break;
            }
            case 213: {
                int best = n + 1;
                for (int i = 0; i < j; ++i)
                    if (at(i) > m) best = std::min(best, at(i));
                if (best == n + 1) break;
                for (int i = j + 1; i < n; ++i)
                    if (at(i) > best) return true;
                break;
            }
            default:
                throw std::logic_error("unreachable pattern code");
        }
    }
    return false;
}

bool contains(const Permutation& s, const Permutation& pattern) {
    return pattern.size() <= 3 ? contains_short(s, pattern) : contains_generic(s, pattern);
}

bool avoids_all(const Permutation& s, std::span<const Permutation> patterns) {
    for (const auto& p : patterns)
        if (contains(s, p)) return false;
    return true;
}

std::vector<Permutation> parse_pattern_list(std::string_view text) {
    std::vector<Permutation> out;
    const bool semi = text.find(';') != std::string_view::npos;
    std::string item;
    auto flush = [&] {
        if (!item.empty()) out.push_back(Permutation::parse(item));
        item.clear();
    };
    for (char c : text) {
        const bool sep = semi ? c == ';' : (c == ',' || std::isspace(static_cast<unsigned char>(c)));
        if (sep) flush();
        else item += c;
    }
    flush();
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string format_pattern_list(std::span<const Permutation> patterns) {
    bool long_one = false;
    for (const auto& p : patterns) long_one = long_one || p.size() > 9;
    std::string out;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        if (i > 0) out += long_one ? ";" : ",";
        out += patterns[i].str();
    }
    return out;
}

Permutation inverse(const Permutation& s) {
    std::vector<int> w(static_cast<std::size_t>(s.size()));
    for (int i = 1; i <= s.size(); ++i) w[static_cast<std::size_t>(s(i) - 1)] = i;
    return Permutation(std::move(w));
}

Permutation reverse(const Permutation& s) {
    auto w = s.word();
    std::reverse(w.begin(), w.end());
    return Permutation(std::move(w));
}

Permutation complement(const Permutation& s) {
    auto w = s.word();
    for (int& v : w) v = s.size() + 1 - v;
    return Permutation(std::move(w));
}

Permutation apply(Symmetry g, const Permutation& s) {
    switch (g) {
        case Symmetry::R0: return s;
        case Symmetry::R90: return reverse(inverse(s));
        case Symmetry::R180: return reverse(complement(s));
        case Symmetry::R270: return inverse(reverse(s));
        case Symmetry::r1: return inverse(s);
        case Symmetry::r_1: return inverse(reverse(complement(s)));
        case Symmetry::r0: return reverse(s);
        case Symmetry::r_inf: return complement(s);
    }
    throw std::logic_error("unknown symmetry");
}

std::string_view symmetry_name(Symmetry g) {
    switch (g) {
        case Symmetry::R0: return "R0";
        case Symmetry::R90: return "R90";
        case Symmetry::R180: return "R180";
        case Symmetry::R270: return "R270";
        case Symmetry::r1: return "r1";
        case Symmetry::r_1: return "r-1";
        case Symmetry::r0: return "r0";
        case Symmetry::r_inf: return "rinf";
    }
    return "?";
}

std::optional<Symmetry> parse_symmetry(std::string_view name) {
    for (Symmetry g : kAllSymmetries)
        if (symmetry_name(g) == name) return g;
    return std::nullopt;
}

Permutation inflate(const Permutation& tau, std::span<const Permutation> blocks) {
    const int k = tau.size();
    if (static_cast<int>(blocks.size()) != k)
        throw std::invalid_argument("inflate: " + std::to_string(blocks.size()) + " blocks for a pattern of length " + std::to_string(k));
    std::vector<int> offset(static_cast<std::size_t>(k), 0);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            if (tau(j) < tau(i)) offset[static_cast<std::size_t>(i - 1)] += blocks[static_cast<std::size_t>(j - 1)].size();
    std::vector<int> w;
    for (int i = 0; i < k; ++i)
        for (int v : blocks[static_cast<std::size_t>(i)].word()) w.push_back(v + offset[static_cast<std::size_t>(i)]);
    return Permutation(std::move(w));
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
    const Permutation blocks[] = {a, b};
    return inflate(Permutation{1, 2}, blocks);
}

Permutation skew_sum(const Permutation& a, const Permutation& b) {
    const Permutation blocks[] = {a, b};
    return inflate(Permutation{2, 1}, blocks);
}

TwoCycleList two_cycles(const Permutation& iota) {
    if (!iota.is_involution()) throw std::invalid_argument("not an involution: " + iota.str());
    TwoCycleList out;
    for (int i = 1; i <= iota.size(); ++i) {
        if (iota(i) == i) out.fixed_points.push_back(i);
        else if (i < iota(i)) out.cycles.emplace_back(i, iota(i));
    }
    return out;
}

Permutation add_two_cycle(const Permutation& hat, int i, int j) {
    const int n = hat.size() + 2;
    if (!(1 <= i && i < j && j <= n))
        throw std::invalid_argument("add_two_cycle: need 1 <= i < j <= " + std::to_string(n));
    auto lift = [&](int v) {
        if (v >= i) ++v;
        if (v >= j) ++v;
        return v;
    };
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    for (int p = 1; p <= hat.size(); ++p) w[static_cast<std::size_t>(lift(p) - 1)] = lift(hat(p));
    w[static_cast<std::size_t>(i - 1)] = j;
    w[static_cast<std::size_t>(j - 1)] = i;
    return Permutation(std::move(w));
}

Permutation remove_two_cycle(const Permutation& iota, int i) {
    const int j = iota(i);
    if (j == i || iota(j) != i) throw std::invalid_argument("remove_two_cycle: " + std::to_string(i) + " is not in a two-cycle");
    std::vector<int> rest;
    for (int p = 1; p <= iota.size(); ++p)
        if (p != i && p != j) rest.push_back(iota(p));
    return Permutation::standardize(rest);
}

Permutation remove_point(const Permutation& s, int i) {
    std::vector<int> rest;
    for (int p = 1; p <= s.size(); ++p)
        if (p != i) rest.push_back(s(p));
    return Permutation::standardize(rest);
}

Permutation insert_point(const Permutation& s, int i, int v) {
    const int n = s.size() + 1;
    if (i < 1 || i > n || v < 1 || v > n) throw std::invalid_argument("insert_point out of range");
    std::vector<int> w;
    for (int p = 1; p <= s.size(); ++p) w.push_back(s(p) >= v ? s(p) + 1 : s(p));
    w.insert(w.begin() + (i - 1), v);
    return Permutation(std::move(w));
}

Landmarks landmark_subsequences(const Permutation& s) {
    Landmarks out;
    const int n = s.size();
    int best = 0;
    for (int i = 1; i <= n; ++i)
        if (s(i) > best) {
            best = s(i);
            out.lr_max.push_back({i, s(i)});
        }
    int low = n + 1, high = 0;
    for (int i = n; i >= 1; --i) {
        if (s(i) < low) {
            low = s(i);
            out.rl_min.push_back({i, s(i)});
        }
        if (s(i) > high) {
            high = s(i);
            out.rl_max.push_back({i, s(i)});
        }
    }
    std::reverse(out.rl_min.begin(), out.rl_min.end());
    std::reverse(out.rl_max.begin(), out.rl_max.end());
    return out;
}

std::optional<std::pair<Permutation, Permutation>> three_block_split(const Permutation& s, const Permutation& shape) {
    if (shape.size() != 3 || shape(2) == 2) throw std::invalid_argument("three_block_split: shape must be 231, 312, 132 or 213");
    if (s.empty()) return std::nullopt;
    const int target = (shape(2) == 3) ? s.size() : 1;
    int k = 1;
    while (s(k) != target) ++k;
    const auto& w = s.word();
    auto s1 = Permutation::standardize(std::span<const int>(w.data(), static_cast<std::size_t>(k - 1)));
    auto s2 = Permutation::standardize(std::span<const int>(w.data() + k, w.size() - static_cast<std::size_t>(k)));
    const Permutation blocks[] = {s1, Permutation{1}, s2};
    if (inflate(shape, blocks) != s) return std::nullopt;
    return std::make_pair(std::move(s1), std::move(s2));
}

}  // namespace permstat
