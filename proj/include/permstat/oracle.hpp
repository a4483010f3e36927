#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/permutation.hpp"
#include "permstat/poly.hpp"

namespace permstat {

enum class Population { Perm, Inv, Fpf };

std::string_view population_name(Population p);  // "perm", "inv", "fpf"
std::optional<Population> parse_population(std::string_view name);

enum class Stat { None, Inv, Coinv, Maj, Comaj, Des, Asc };

std::string_view stat_name(Stat s);
std::uint64_t stat_value(Stat s, const StatBundle& b);

// Which statistic feeds the exponent of each of p, q, t.
struct Weight {
    Stat p = Stat::None, q = Stat::None, t = Stat::None;
    bool operator==(const Weight&) const = default;

    static Weight single(Stat s) { return {Stat::None, s, Stat::None}; }
    static Weight joint() { return {Stat::Inv, Stat::Maj, Stat::Des}; }
    static Weight bar_joint() { return {Stat::Coinv, Stat::Comaj, Stat::Asc}; }
    static Weight count() { return {}; }

    // inv, coinv, maj, comaj, joint, bar-joint, count, or "p:inv,q:maj,t:des".
    static std::optional<Weight> parse(std::string_view text);
    std::string name() const;
    Monomial monomial(const StatBundle& b) const {
        return {static_cast<std::uint32_t>(stat_value(p, b)), static_cast<std::uint32_t>(stat_value(q, b)),
                static_cast<std::uint32_t>(stat_value(t, b))};
    }
};

struct Caps {
    int perm = 10;
    int inv = 14;
    int cap(Population p) const { return p == Population::Perm ? perm : inv; }
};

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void check_cap(Population pop, int n, const Caps& caps);

// Chunk c of the population is the set of members whose first letter (perm) or whose largest
// index's choice (involutions) is fixed; chunks partition the population and are visited in order.
int chunk_count(Population pop, int n);
void for_each_in_chunk(Population pop, int n, int chunk, const std::function<void(const Permutation&)>& fn);
// Every member exactly once, deterministic order; throws CapExceeded.
void for_each_member(Population pop, int n, const std::function<void(const Permutation&)>& fn, const Caps& caps = {});
std::vector<Permutation> enumerate(Population pop, int n, const Caps& caps = {});

struct AvoidanceClass {
    Population population = Population::Inv;
    int n = 0;
    std::vector<Permutation> patterns;

    void for_each(const std::function<void(const Permutation&)>& fn, const Caps& caps = {}) const;
    std::vector<Permutation> members(const Caps& caps = {}) const;
    std::uint64_t size(const Caps& caps = {}) const;
};

// Restricts a class to members with a given number of two-cycles.
struct TwoCycleFilter {
    enum class Kind { None, AtMost, Exactly };
    Kind kind = Kind::None;
    int k = 0;
    bool accepts(int cycles) const {
        switch (kind) {
            case Kind::AtMost: return cycles <= k;
            case Kind::Exactly: return cycles == k;
            default: return true;
        }
    }
    bool operator==(const TwoCycleFilter&) const = default;
};

struct ParallelOptions {
    int jobs = 0;  // 0: hardware concurrency
};

MultiPoly genfun(const AvoidanceClass& cls, const Weight& w, const Caps& caps = {}, ParallelOptions par = {});

// One enumeration of the population, several pattern sets; result i belongs to sets[i].
std::vector<MultiPoly> genfun_many(Population pop, int n, const std::vector<std::vector<Permutation>>& sets, const Weight& w,
                                   const Caps& caps = {}, ParallelOptions par = {});

// Statistics of every member of a class, kept so several weights and filters can be read off one enumeration.
struct ClassSnapshot {
    std::vector<StatBundle> stats;
    std::vector<std::uint8_t> two_cycle_counts;

    MultiPoly genfun(const Weight& w, TwoCycleFilter filter = {}) const;
};

ClassSnapshot snapshot(const AvoidanceClass& cls, const Caps& caps = {}, ParallelOptions par = {});

// Thread-safe memo of snapshots keyed by (population, patterns, n).
class SnapshotCache {
public:
    explicit SnapshotCache(Caps caps = {}, ParallelOptions par = {}) : caps_(caps), par_(par) {}
    std::shared_ptr<const ClassSnapshot> get(const AvoidanceClass& cls);
    const Caps& caps() const { return caps_; }

private:
    Caps caps_;
    ParallelOptions par_;
    std::mutex mu_;
    std::map<std::string, std::shared_ptr<const ClassSnapshot>> entries_;
};

// Groups pattern sets whose genfun sequences agree for every n in 0..n_max. Classes are listed in
// order of first member, members in input order.
std::vector<std::vector<int>> wilf_fingerprint(const std::vector<std::vector<Permutation>>& pattern_sets, Population pop, int n_max,
                                               const Weight& w, const Caps& caps = {}, ParallelOptions par = {});

}  // namespace permstat
