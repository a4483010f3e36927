#include "permstat/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "permstat/parallel.hpp"

namespace permstat {

std::string_view population_name(Population p) {
    switch (p) {
        case Population::Perm: return "perm";
        case Population::Inv: return "inv";
        case Population::Fpf: return "fpf";
    }
    return "?";
}

std::optional<Population> parse_population(std::string_view name) {
    if (name == "perm" || name == "permutations") return Population::Perm;
    if (name == "inv" || name == "involutions") return Population::Inv;
    if (name == "fpf") return Population::Fpf;
    return std::nullopt;
}

std::string_view stat_name(Stat s) {
    switch (s) {
        case Stat::None: return "none";
        case Stat::Inv: return "inv";
        case Stat::Coinv: return "coinv";
        case Stat::Maj: return "maj";
        case Stat::Comaj: return "comaj";
        case Stat::Des: return "des";
        case Stat::Asc: return "asc";
    }
    return "?";
}

std::uint64_t stat_value(Stat s, const StatBundle& b) {
    switch (s) {
        case Stat::None: return 0;
        case Stat::Inv: return b.inv;
        case Stat::Coinv: return b.coinv;
        case Stat::Maj: return b.maj;
        case Stat::Comaj: return b.comaj;
        case Stat::Des: return b.des;
        case Stat::Asc: return b.asc;
    }
    return 0;
}

namespace {

std::optional<Stat> parse_stat(std::string_view s) {
    for (Stat x : {Stat::None, Stat::Inv, Stat::Coinv, Stat::Maj, Stat::Comaj, Stat::Des, Stat::Asc})
        if (stat_name(x) == s) return x;
    return std::nullopt;
}

}  // namespace

std::optional<Weight> Weight::parse(std::string_view text) {
    if (text == "joint") return joint();
    if (text == "bar-joint") return bar_joint();
    if (text == "count") return count();
    if (text.find(':') == std::string_view::npos) {
        auto s = parse_stat(text);
        if (!s || *s == Stat::None) return std::nullopt;
        return single(*s);
    }
    Weight w;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        const auto colon = item.find(':');
        if (colon != 1) return std::nullopt;
        auto s = parse_stat(item.substr(2));
        if (!s) return std::nullopt;
        switch (item[0]) {
            case 'p': w.p = *s; break;
            case 'q': w.q = *s; break;
            case 't': w.t = *s; break;
            default: return std::nullopt;
        }
    }
    return w;
}

std::string Weight::name() const {
    if (*this == joint()) return "joint";
    if (*this == bar_joint()) return "bar-joint";
    if (*this == count()) return "count";
    if (p == Stat::None && t == Stat::None) return std::string(stat_name(q));
    std::string out;
    auto part = [&](char v, Stat s) {
        if (s == Stat::None) return;
        if (!out.empty()) out += ',';
        out += v;
        out += ':';
        out += stat_name(s);
    };
    part('p', p);
    part('q', q);
    part('t', t);
    return out;
}

void check_cap(Population pop, int n, const Caps& caps) {
    if (n < 0) throw std::invalid_argument("negative length " + std::to_string(n));
    if (n > caps.cap(pop) || n > kMaxLength)
        throw CapExceeded("n=" + std::to_string(n) + " exceeds the " + std::string(population_name(pop)) + " cap of " +
                          std::to_string(std::min(caps.cap(pop), kMaxLength)));
}

int chunk_count(Population pop, int n) {
    if (n == 0) return 1;
    switch (pop) {
        case Population::Perm: return n;
        case Population::Inv: return n;
        case Population::Fpf: return n % 2 == 0 ? n - 1 : 0;
    }
    return 0;
}

namespace {

// Matches the indices in `unused`: the largest one is either fixed or paired with a smaller one.
void matchings(std::vector<int>& w, std::uint64_t unused, bool allow_fixed, const Permutation& view,
               const std::function<void(const Permutation&)>& fn) {
    if (unused == 0) {
        fn(view);
        return;
    }
    const int i = 63 - std::countl_zero(unused);
    const std::uint64_t rest = unused & ~(std::uint64_t{1} << i);
    if (allow_fixed) {
        w[static_cast<std::size_t>(i - 1)] = i;
        matchings(w, rest, allow_fixed, view, fn);
    }
    for (std::uint64_t r = rest; r != 0; r &= r - 1) {
        const int j = std::countr_zero(r);
        w[static_cast<std::size_t>(i - 1)] = j;
        w[static_cast<std::size_t>(j - 1)] = i;
        matchings(w, rest & ~(std::uint64_t{1} << j), allow_fixed, view, fn);
    }
}

std::uint64_t index_mask(int n) {
    // bits 1..n
    return n >= 63 ? ~std::uint64_t{1} : ((std::uint64_t{1} << (n + 1)) - 2);
}

}  // namespace

void for_each_in_chunk(Population pop, int n, int chunk, const std::function<void(const Permutation&)>& fn) {
    if (chunk < 0 || chunk >= chunk_count(pop, n)) throw std::out_of_range("chunk index out of range");
    if (n > kMaxLength - 1 && pop != Population::Perm) throw std::invalid_argument("length too large for involution enumeration");
    Permutation p = Permutation::identity(n);
    auto& w = PermutationEditor::word(p);
    if (n == 0) {
        fn(p);
        return;
    }
    if (pop == Population::Perm) {
        const int first = chunk + 1;
        w[0] = first;
        std::iota(w.begin() + 1, w.end(), 1);
        for (auto it = w.begin() + 1; it != w.end(); ++it)
            if (*it >= first) *it += 1;
        do fn(p);
        while (std::next_permutation(w.begin() + 1, w.end()));
        return;
    }
    const bool allow_fixed = pop == Population::Inv;
    // chunk 0 of the involutions fixes n; otherwise n is paired with j
    const int j = allow_fixed ? chunk : chunk + 1;
    std::uint64_t unused = index_mask(n) & ~(std::uint64_t{1} << n);
    if (j == 0) {
        w[static_cast<std::size_t>(n - 1)] = n;
    } else {
        w[static_cast<std::size_t>(n - 1)] = j;
        w[static_cast<std::size_t>(j - 1)] = n;
        unused &= ~(std::uint64_t{1} << j);
    }
    matchings(w, unused, allow_fixed, p, fn);
}

void for_each_member(Population pop, int n, const std::function<void(const Permutation&)>& fn, const Caps& caps) {
    check_cap(pop, n, caps);
    for (int c = 0; c < chunk_count(pop, n); ++c) for_each_in_chunk(pop, n, c, fn);
}

std::vector<Permutation> enumerate(Population pop, int n, const Caps& caps) {
    std::vector<Permutation> out;
    for_each_member(pop, n, [&](const Permutation& p) { out.push_back(p); }, caps);
    return out;
}

void AvoidanceClass::for_each(const std::function<void(const Permutation&)>& fn, const Caps& caps) const {
    for_each_member(population, n, [&](const Permutation& p) {
        if (avoids_all(p, patterns)) fn(p);
    }, caps);
}

std::vector<Permutation> AvoidanceClass::members(const Caps& caps) const {
    std::vector<Permutation> out;
    for_each([&](const Permutation& p) { out.push_back(p); }, caps);
    return out;
}

std::uint64_t AvoidanceClass::size(const Caps& caps) const {
    std::uint64_t c = 0;
    for_each([&](const Permutation&) { ++c; }, caps);
    return c;
}

std::vector<MultiPoly> genfun_many(Population pop, int n, const std::vector<std::vector<Permutation>>& sets, const Weight& w,
                                   const Caps& caps, ParallelOptions par) {
    check_cap(pop, n, caps);
    using Partial = std::vector<MultiPoly>;
    auto parts = map_chunks<Partial>(chunk_count(pop, n), par.jobs, [&](int chunk) {
        Partial acc(sets.size());
        for_each_in_chunk(pop, n, chunk, [&](const Permutation& s) {
            bool have = false;
            Monomial m;
            for (std::size_t i = 0; i < sets.size(); ++i) {
                if (!avoids_all(s, sets[i])) continue;
                if (!have) {
                    m = w.monomial(stats(s));
                    have = true;
                }
                acc[i].add_term(m, 1);
            }
        });
        return acc;
    });
    std::vector<MultiPoly> out(sets.size());
    for (const auto& part : parts)
        for (std::size_t i = 0; i < sets.size(); ++i) out[i] += part[i];
    return out;
}

MultiPoly genfun(const AvoidanceClass& cls, const Weight& w, const Caps& caps, ParallelOptions par) {
    return genfun_many(cls.population, cls.n, {cls.patterns}, w, caps, par).front();
}

MultiPoly ClassSnapshot::genfun(const Weight& w, TwoCycleFilter filter) const {
    MultiPoly out;
    for (std::size_t i = 0; i < stats.size(); ++i)
        if (filter.accepts(two_cycle_counts[i])) out.add_term(w.monomial(stats[i]), 1);
    return out;
}

ClassSnapshot snapshot(const AvoidanceClass& cls, const Caps& caps, ParallelOptions par) {
    check_cap(cls.population, cls.n, caps);
    auto parts = map_chunks<ClassSnapshot>(chunk_count(cls.population, cls.n), par.jobs, [&](int chunk) {
        ClassSnapshot acc;
        for_each_in_chunk(cls.population, cls.n, chunk, [&](const Permutation& s) {
            if (!avoids_all(s, cls.patterns)) return;
            acc.stats.push_back(stats(s));
            int moved = 0;
            for (int i = 1; i <= s.size(); ++i) moved += s(i) != i;
            acc.two_cycle_counts.push_back(static_cast<std::uint8_t>(moved / 2));
        });
        return acc;
    });
    ClassSnapshot out;
    for (auto& part : parts) {
        out.stats.insert(out.stats.end(), part.stats.begin(), part.stats.end());
        out.two_cycle_counts.insert(out.two_cycle_counts.end(), part.two_cycle_counts.begin(), part.two_cycle_counts.end());
    }
    return out;
}

std::shared_ptr<const ClassSnapshot> SnapshotCache::get(const AvoidanceClass& cls) {
    const std::string key = std::string(population_name(cls.population)) + "|" + format_pattern_list(cls.patterns) + "|" + std::to_string(cls.n);
    {
        std::lock_guard lock(mu_);
        if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    }
    auto snap = std::make_shared<const ClassSnapshot>(snapshot(cls, caps_, par_));
    std::lock_guard lock(mu_);
    return entries_.try_emplace(key, std::move(snap)).first->second;
}

std::vector<std::vector<int>> wilf_fingerprint(const std::vector<std::vector<Permutation>>& pattern_sets, Population pop, int n_max,
                                               const Weight& w, const Caps& caps, ParallelOptions par) {
    std::vector<std::vector<MultiPoly>> seq(pattern_sets.size());
    for (int n = 0; n <= n_max; ++n) {
        if (pop == Population::Fpf && n % 2 == 1) continue;
        auto polys = genfun_many(pop, n, pattern_sets, w, caps, par);
        for (std::size_t i = 0; i < polys.size(); ++i) seq[i].push_back(std::move(polys[i]));
    }
    std::vector<std::vector<int>> classes;
    std::vector<int> rep;  // representative index per class
    for (std::size_t i = 0; i < seq.size(); ++i) {
        bool placed = false;
        for (std::size_t c = 0; c < classes.size(); ++c) {
            if (seq[static_cast<std::size_t>(rep[c])] == seq[i]) {
                classes[c].push_back(static_cast<int>(i));
                placed = true;
                break;
            }
        }
        if (!placed) {
            classes.push_back({static_cast<int>(i)});
            rep.push_back(static_cast<int>(i));
        }
    }
    return classes;
}

}  // namespace permstat
