#include "permstat/bijection_checks.hpp"

#include <bit>
#include <functional>
#include <stdexcept>

#include "permstat/binary_word.hpp"
#include "permstat/descent_sets.hpp"
#include "permstat/involution123.hpp"
#include "permstat/parallel.hpp"
#include "permstat/star.hpp"
#include "permstat/tableau.hpp"

namespace permstat {

namespace {

using Failure = std::optional<std::string>;
using CheckFn = std::function<Failure(const Permutation&)>;

PositionSet full_set(int n) { return n >= 2 ? ((PositionSet{1} << n) - 2) : 0; }

PositionSet complement_set(PositionSet s, int n) { return full_set(n) & ~s; }

PositionSet set_of(const std::vector<int>& v) { return make_position_set(v); }

struct Tally {
    std::uint64_t checked = 0, failures = 0;
    std::string first;

    void record(const Failure& f) {
        ++checked;
        if (!f) return;
        if (failures++ == 0) first = *f;
    }
    void merge(const Tally& o) {
        if (failures == 0 && o.failures > 0) first = o.first;
        checked += o.checked;
        failures += o.failures;
    }
};

Tally sweep(Population pop, int n, const std::vector<Permutation>& patterns, const CheckFn& fn, ParallelOptions par) {
    auto parts = map_chunks<Tally>(chunk_count(pop, n), par.jobs, [&](int chunk) {
        Tally t;
        for_each_in_chunk(pop, n, chunk, [&](const Permutation& s) {
            if (!avoids_all(s, patterns)) return;
            try {
                t.record(fn(s));
            } catch (const std::exception& e) {
                t.record(s.str() + ": threw " + e.what());
            }
        });
        return t;
    });
    Tally total;
    for (const auto& p : parts) total.merge(p);
    return total;
}

// Sweeps n-letter binary words, optionally only those with a given number of ones.
Tally sweep_words(int n, int ones, const std::function<Failure(const BinaryWord&)>& fn) {
    Tally t;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (ones >= 0 && std::popcount(mask) != ones) continue;
        std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) bits[static_cast<std::size_t>(i)] = (mask >> (n - 1 - i)) & 1;
        const BinaryWord w(std::move(bits));
        try {
            t.record(fn(w));
        } catch (const std::exception& e) {
            t.record(w.str() + ": threw " + e.what());
        }
    }
    return t;
}

const Permutation p123{1, 2, 3}, p132{1, 3, 2}, p213{2, 1, 3}, p321{3, 2, 1};

Failure fail(const Permutation& s, const std::string& what) { return s.str() + ": " + what; }

Tally check_phi321(int n, ParallelOptions par) {
    const int ones = (n + 1) / 2;
    Tally t = sweep(Population::Inv, n, {p321}, [&](const Permutation& iota) -> Failure {
        const BinaryWord w = phi_321(iota);
        if (w.ones() != ones) return fail(iota, "image " + w.str() + " has the wrong number of ones");
        if (set_of(w.descent_set()) != descent_set(iota)) return fail(iota, "descent set not preserved by " + w.str());
        if (phi_321_inv(w) != iota) return fail(iota, "inverse of " + w.str() + " gives " + phi_321_inv(w).str());
        return std::nullopt;
    }, par);
    // and every word with ceil(n/2) ones is hit
    t.merge(sweep_words(n, ones, [&](const BinaryWord& w) -> Failure {
        const Permutation iota = phi_321_inv(w);
        if (!iota.is_involution() || contains(iota, p321)) return w.str() + ": preimage " + iota.str() + " is not in I_n(321)";
        if (phi_321(iota) != w) return w.str() + ": round trip gives " + phi_321(iota).str();
        return std::nullopt;
    }));
    return t;
}

Tally check_transpose_inv(int n, ParallelOptions par) {
    auto one_way = [n](const Permutation& avoid, const Permutation& target) {
        return [n, avoid, target](const Permutation& iota) -> Failure {
            const Permutation out = transpose_map_involution(iota);
            if (!out.is_involution() || contains(out, target))
                return fail(iota, "image " + out.str() + " is not an involution avoiding " + target.str());
            if (descent_set(out) != complement_set(descent_set(iota), n)) return fail(iota, "descent set not complemented");
            if (transpose_map_involution(out) != iota) return fail(iota, "not an involution of the map");
            return std::nullopt;
        };
    };
    Tally t = sweep(Population::Inv, n, {p321}, one_way(p321, p123), par);
    t.merge(sweep(Population::Inv, n, {p123}, one_way(p123, p321), par));
    return t;
}

Tally check_transpose_perm(int n, ParallelOptions par) {
    return sweep(Population::Perm, n, {p123}, [n](const Permutation& s) -> Failure {
        const auto [p, q] = rsk(s);
        if (inverse_rsk(p, q) != s) return fail(s, "inverse RSK does not recover the input");
        const Permutation out = transpose_map_perm(s);
        if (contains(out, p321)) return fail(s, "image " + out.str() + " contains 321");
        if (descent_set(out) != complement_set(descent_set(s), n)) return fail(s, "descent set not complemented");
        if (transpose_map_perm(out) != s) return fail(s, "map applied twice is not the identity");
        if (transpose_map_perm(inverse(s)) != inverse(out)) return fail(s, "does not commute with r1");
        return std::nullopt;
    }, par);
}

Tally check_desc213(int n, ParallelOptions par) {
    Tally t = sweep(Population::Inv, n, {p213}, [n](const Permutation& iota) -> Failure {
        const DescentSubset a = varphi_213(iota);
        if (!a.in_G()) return fail(iota, a.str() + " is not in G_n");
        if (varphi_213_inv(a) != iota) return fail(iota, "varphi inverse gives " + varphi_213_inv(a).str());
        const DescentSubset b = f_complement(a);
        if (!b.in_L()) return fail(iota, b.str() + " is not in L_n");
        const Permutation out = psi_132_inv(b);
        if (!out.is_involution() || contains(out, p132)) return fail(iota, "image " + out.str() + " is not in I_n(132)");
        if (descent_set(out) != complement_set(descent_set(iota), n)) return fail(iota, "descent set not complemented");
        if (psi_132(out) != b) return fail(iota, "psi does not recover " + b.str());
        return std::nullopt;
    }, par);
    // psi^{-1} is onto I_n(132)
    t.merge(sweep(Population::Inv, n, {p132}, [](const Permutation& iota) -> Failure {
        const DescentSubset b = psi_132(iota);
        if (!b.in_L()) return fail(iota, b.str() + " is not in L_n");
        if (psi_132_inv(b) != iota) return fail(iota, "psi inverse gives " + psi_132_inv(b).str());
        return std::nullopt;
    }, par));
    // the order characterization of G_n on every subset of [n-1]
    if (n >= 1) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
            std::vector<int> e;
            for (int i = 1; i < n; ++i)
                if (mask >> (i - 1) & 1) e.push_back(i);
            const DescentSubset a(e, n);
            const bool by_order = dominates(a, g_threshold(a));
            t.record(by_order == a.in_G() ? Failure{} : Failure{a.str() + ": order test disagrees with G_n membership"});
            const bool by_complement = f_complement(a).in_L();
            t.record(by_complement == a.in_G() ? Failure{} : Failure{a.str() + ": complement is not in L_n"});
        }
    }
    return t;
}

Tally check_theta(int n, ParallelOptions par) {
    Tally t = sweep(Population::Perm, n, {p132}, [](const Permutation& s) -> Failure {
        const Permutation out = theta(s);
        if (contains(out, p213)) return fail(s, "image " + out.str() + " contains 213");
        if (descent_set(out) != ascent_set(s)) return fail(s, "Asc(s) != Des(theta(s)) for " + out.str());
        if (theta_inv(out) != s) return fail(s, "theta_inv gives " + theta_inv(out).str());
        if (theta(inverse(s)) != inverse(out)) return fail(s, "does not commute with r1");
        if (s.is_involution() != out.is_involution()) return fail(s, "involution property not preserved");
        return std::nullopt;
    }, par);
    // theta_inv is defined on all of S_n(213)
    t.merge(sweep(Population::Perm, n, {p213}, [](const Permutation& s) -> Failure {
        const Permutation back = theta_inv(s);
        if (theta(back) != s) return fail(s, "theta(theta_inv) gives " + theta(back).str());
        return std::nullopt;
    }, par));
    return t;
}

Tally check_beissinger(int n, ParallelOptions par) {
    return sweep(Population::Inv, n, {}, [n](const Permutation& iota) -> Failure {
        if (n == 0) return std::nullopt;
        const StandardYoungTableau full = rsk_involution(iota);
        if (iota(n) == n) {
            auto rows = rsk_involution(remove_point(iota, n)).rows();
            if (rows.empty()) rows.emplace_back();
            rows.front().push_back(n);
            if (StandardYoungTableau(rows) != full) return fail(iota, "fixed point n is not appended to the first row");
            return std::nullopt;
        }
        const int i = iota(n);
        const StandardYoungTableau built = beissinger_insert(rsk_involution(remove_two_cycle(iota, n)), i, n);
        if (built != full) return fail(iota, "insertion gives " + built.str() + ", RSK gives " + full.str());
        return std::nullopt;
    }, par);
}

Tally check_rsk_involution(int n, ParallelOptions par) {
    return sweep(Population::Inv, n, {}, [](const Permutation& iota) -> Failure {
        const StandardYoungTableau t = rsk_involution(iota);
        if (syt_to_involution(t) != iota) return fail(iota, "round trip through " + t.str() + " fails");
        if (set_of(t.descent_set()) != descent_set(iota)) return fail(iota, "descent set differs from that of " + t.str());
        int fixed = 0, odd_columns = 0;
        for (int i = 1; i <= iota.size(); ++i) fixed += iota(i) == i;
        const StandardYoungTableau cols = t.transpose();
        for (const auto& col : cols.rows()) odd_columns += static_cast<int>(col.size() % 2);
        if (fixed != odd_columns) return fail(iota, "fixed points do not match odd columns of " + t.str());
        return std::nullopt;
    }, par);
}

Tally check_star_split(int n, ParallelOptions par) {
    return sweep(Population::Perm, n, {p213}, [n](const Permutation& s) -> Failure {
        if (n < 2) return std::nullopt;
        const auto xy = split_star(s);
        const auto z = split_star1(s);
        if (xy.has_value() == z.has_value()) return fail(s, "exactly one splitter must apply");
        if (xy) {
            if (contains(xy->first, p213) || contains(xy->second, p213)) return fail(s, "split parts contain 213");
            if (star_product(xy->first, xy->second) != s) return fail(s, "x*y does not reassemble");
        } else {
            if (contains(*z, p213)) return fail(s, "z contains 213");
            if (star1_extend(*z) != s) return fail(s, "z*1 does not reassemble");
        }
        return std::nullopt;
    }, par);
}

Tally check_core(int n) {
    return sweep_words(n, -1, [](const BinaryWord& w) -> Failure {
        const auto c = core(w);
        if (c.matched != core_by_adjacent_pairs(w)) return w.str() + ": stack matching differs from adjacent-pair matching";
        // i-th core 1 before i-th core 0 with everything in between matched
        std::vector<int> ones, zeros;
        for (int i : c.matched) (w(i) == 1 ? ones : zeros).push_back(i);
        if (ones.size() != zeros.size()) return w.str() + ": unbalanced core";
        std::vector<char> in(static_cast<std::size_t>(w.size()) + 1, 0);
        for (int i : c.matched) in[static_cast<std::size_t>(i)] = 1;
        for (std::size_t r = 0; r < ones.size(); ++r) {
            if (ones[r] > zeros[r]) return w.str() + ": core 1 after its 0";
            for (int i = ones[r]; i <= zeros[r]; ++i)
                if (!in[static_cast<std::size_t>(i)]) return w.str() + ": gap inside a core pair";
        }
        int last = 0;
        for (int i = 1; i <= w.size(); ++i)
            if (!in[static_cast<std::size_t>(i)]) {
                if (w(i) < last) return w.str() + ": unmatched letters are not weakly increasing";
                last = w(i);
            }
        return std::nullopt;
    });
}

Tally check_decompose123(int n, ParallelOptions par) {
    return sweep(Population::Inv, n, {p123}, [](const Permutation& iota) -> Failure {
        const CycleInsertionSeq seq = decompose_123(iota);
        if (rebuild_123(seq) != iota) return fail(iota, "rebuild does not recover the input");
        const Permutation tau = seq.kind == CycleInsertionSeq::Kind::Decreasing
                                    ? Permutation::decreasing(seq.m)
                                    : direct_sum(Permutation::decreasing(seq.m - 1), Permutation{1});
        std::uint64_t extra = 0;
        for (int a : seq.a) extra += 2 * static_cast<std::uint64_t>(a - 1);
        if (stats(iota).coinv != stats(tau).coinv + extra) return fail(iota, "coinv formula fails");
        return std::nullopt;
    }, par);
}

}  // namespace

const std::vector<std::string>& bijection_names() {
    static const std::vector<std::string> names{"phi321",     "transpose-inv",  "transpose-perm", "desc213", "theta",
                                                "beissinger", "rsk-involution", "star-split",     "core",    "decompose123"};
    return names;
}

BijectionCheck verify_bijection(const std::string& name, int n, ParallelOptions par) {
    if (n < 0) throw std::invalid_argument("verify_bijection: negative n");
    Tally t;
    if (name == "phi321") t = check_phi321(n, par);
    else if (name == "transpose-inv") t = check_transpose_inv(n, par);
    else if (name == "transpose-perm") t = check_transpose_perm(n, par);
    else if (name == "desc213") t = check_desc213(n, par);
    else if (name == "theta") t = check_theta(n, par);
    else if (name == "beissinger") t = check_beissinger(n, par);
    else if (name == "rsk-involution") t = check_rsk_involution(n, par);
    else if (name == "star-split") t = check_star_split(n, par);
    else if (name == "core") t = check_core(n);
    else if (name == "decompose123") t = check_decompose123(n, par);
    else throw std::invalid_argument("unknown bijection '" + name + "'");
    return {name, n, t.checked, t.failures, t.first};
}

const std::vector<std::string>& runnable_bijections() {
    static const std::vector<std::string> names{"phi321",   "phi321-inv", "transpose-inv", "transpose-perm", "varphi213",
                                                "varphi-inv", "psi132",   "psi-inv",       "desc213",        "theta",
                                                "theta-inv", "star1",     "syt",           "syt-inv",        "rsk",
                                                "core",      "decompose123"};
    return names;
}

std::string run_bijection(const std::string& name, const std::string& input, int ambient) {
    auto perm = [&] { return Permutation::parse(input); };
    auto need_n = [&] {
        if (ambient < 0) throw std::invalid_argument(name + " needs --n for the ambient size");
        return ambient;
    };
    if (name == "phi321") return phi_321(perm()).str();
    if (name == "phi321-inv") return phi_321_inv(BinaryWord::parse(input)).str();
    if (name == "transpose-inv") return transpose_map_involution(perm()).str();
    if (name == "transpose-perm") return transpose_map_perm(perm()).str();
    if (name == "varphi213") return varphi_213(perm()).str();
    if (name == "varphi-inv") return varphi_213_inv(DescentSubset::parse(input, need_n())).str();
    if (name == "psi132") return psi_132(perm()).str();
    if (name == "psi-inv") return psi_132_inv(DescentSubset::parse(input, need_n())).str();
    if (name == "desc213") return map_213_to_132(perm()).str();
    if (name == "theta") return theta(perm()).str();
    if (name == "theta-inv") return theta_inv(perm()).str();
    if (name == "star1") return star1_extend(perm()).str();
    if (name == "syt") return rsk_involution(perm()).pretty();
    if (name == "syt-inv") return syt_to_involution(StandardYoungTableau::parse(input)).str();
    if (name == "rsk") {
        const auto [p, q] = rsk(perm());
        return "P:\n" + p.pretty() + "Q:\n" + q.pretty();
    }
    if (name == "core") {
        const auto c = core(BinaryWord::parse(input));
        std::string s = "{";
        for (std::size_t i = 0; i < c.matched.size(); ++i) s += (i ? "," : "") + std::to_string(c.matched[i]);
        return s + "}";
    }
    if (name == "decompose123") {
        const auto seq = decompose_123(perm());
        std::string s = seq.kind == CycleInsertionSeq::Kind::Decreasing ? "d_" + std::to_string(seq.m)
                                                                        : "12[d_" + std::to_string(seq.m - 1) + ",1]";
        s += " a=(";
        for (std::size_t i = 0; i < seq.a.size(); ++i) s += (i ? "," : "") + std::to_string(seq.a[i]);
        return s + ")";
    }
    throw std::invalid_argument("unknown bijection '" + name + "'");
}

}  // namespace permstat
