#include <doctest.h>

#include <functional>
#include <map>

#include "permstat/formulas.hpp"
#include "permstat/involution123.hpp"
#include "support/bridge.hpp"
#include "support/brute.hpp"

using namespace permstat;
using bridge::P;

namespace {

MultiPoly Q(const char* s) { return MultiPoly::parse(s); }

int stat_of(Stat s, const brute::Word& w) {
    switch (s) {
        case Stat::Inv: return brute::inv(w);
        case Stat::Coinv: return brute::coinv(w);
        case Stat::Maj: return brute::maj(w);
        case Stat::Comaj: return brute::comaj(w);
        case Stat::Des: return brute::des(w);
        case Stat::Asc: return brute::asc(w);
        default: return 0;
    }
}

int cycles_of(const brute::Word& w) {
    int c = 0;
    for (std::size_t i = 0; i < w.size(); ++i) c += w[i] > static_cast<int>(i + 1);
    return c;
}

// A_{m,l} straight from the three conditions: each entry is bounded by the last entry other than 1
// (or m when there is none) plus the number of 1s since.
void ab_rec(int m, int l, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == l) {
        out.push_back(cur);
        return;
    }
    int base = m, ones = 0;
    for (std::size_t i = cur.size(); i-- > 0;) {
        if (cur[i] != 1) {
            base = cur[i];
            break;
        }
        ++ones;
    }
    for (int a = 1; a <= base + ones; ++a) {
        cur.push_back(a);
        ab_rec(m, l, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> reference_AB(int m, int l, bool b_only) {
    std::vector<std::vector<int>> all, out;
    std::vector<int> cur;
    ab_rec(m, l, cur, all);
    for (auto& s : all)
        if (!b_only || s.empty() || s[0] != 1) out.push_back(s);
    if (b_only && m == 1) out.clear();
    return out;
}

std::vector<brute::Word> population(Population pop, int n) {
    switch (pop) {
        case Population::Perm: return brute::all_perms(n);
        case Population::Inv: return brute::involutions(n);
        default: return brute::fpf_involutions(n);
    }
}

std::map<std::pair<int, int>, std::vector<brute::Word>> g_pop_cache;

// The reference value of a registry entry, read from its oracle description.
MultiPoly reference(const FormulaInfo& f, int n, int k) {
    const OracleSpec& s = f.oracle;
    if (s.kind != OracleSpec::Kind::Class) {
        brute::QPoly r;
        for (auto& seq : reference_AB(n, k, s.kind == OracleSpec::Kind::CycleInsertionB)) {
            int e = 0;
            for (int a : seq) e += a - 1;
            ++r[e];
        }
        return bridge::from_q(r);
    }
    const int len = s.half_index ? 2 * n : n;
    auto key = std::make_pair(static_cast<int>(s.population), len);
    if (!g_pop_cache.count(key)) g_pop_cache[key] = population(s.population, len);
    std::vector<brute::Word> pats;
    for (auto& p : s.patterns) pats.push_back(p.word());
    brute::JointPoly j;
    for (auto& w : g_pop_cache[key]) {
        if (!brute::avoids(w, pats)) continue;
        const int c = cycles_of(w);
        if (s.filter == TwoCycleFilter::Kind::AtMost && c > k) continue;
        if (s.filter == TwoCycleFilter::Kind::Exactly && c != k) continue;
        ++j[{stat_of(s.weight.p, w), stat_of(s.weight.q, w), stat_of(s.weight.t, w)}];
    }
    return bridge::from_joint(j);
}

}  // namespace

TEST_SUITE("formulas") {

TEST_CASE("frozen small values") {
    CHECK(catalan_q(0) == Q("1"));
    CHECK(catalan_q(2) == Q("1 + q"));
    CHECK(catalan_q(3) == Q("1 + 2*q + q^2 + q^3"));
    CHECK(ii_231(0) == Q("1"));
    CHECK(ii_231(2) == Q("1 + q"));
    // inv over 123, 132, 213, 321 is 0, 1, 1, 3; the maj version is the one with q^2
    CHECK(ii_231(3) == Q("1 + 2*q + q^3"));
    CHECK(bar_ifi_132(0) == Q("1"));
    CHECK(bar_ifi_132(2) == Q("1 + q^2"));
    CHECK(bar_ifi_132(3) == Q("1 + 2*q^2 + q^4 + q^6"));
    CHECK(bar_ifi_132(3) == substitute(catalan_q(3), Substitution::q_squared()));
    CHECK(bar_ii_132(0) == Q("1"));
    CHECK(bar_ii_132(1) == Q("1"));
    CHECK(bar_ii_132(3) == Q("1 + q^2 + q^3"));
    CHECK(ifi_321(1) == Q("q"));
    CHECK(ifi_321(2) == Q("q^2 + q^4"));
    CHECK(ii_321(1) == Q("1"));
    CHECK(ii_321(4) == Q("1 + 3*q + q^2 + q^4"));
    for (int m = 1; m <= 5; ++m) CHECK(seq_A(m, 0) == Q("1"));
    for (int l = 0; l <= 5; ++l) CHECK(seq_B(1, l).is_zero());
    CHECK(seq_A(1, 1) == Q("1"));
    CHECK(bar_ii_123(1) == Q("1"));
    CHECK(bar_ii_123(3) == Q("1 + 2*q^2"));
    CHECK(mi_231(1) == Q("1"));
    CHECK(mi_231(3) == Q("1 + q + q^2 + q^3"));
    CHECK(mfi_132(0) == Q("1"));
    CHECK(mi_132(0) == Q("1"));
    CHECK(mi_132(1) == Q("1"));
    CHECK(mi_132_maj(3) == Q("1 + q + q^3"));
    CHECK(mi_321(3) == Q("1 + q + q^2"));
    CHECK(mi_321(4) == Q("1 + q + 2*q^2 + q^3 + q^4"));
    CHECK(mi_123(3) == Q("q + q^2 + q^3"));
}

TEST_CASE("the printed lower index of the MI_n(231) product doubles the count") {
    for (int n = 1; n <= 10; ++n) {
        CHECK(mi_231(n).evaluate_at_one() == (1LL << (n - 1)));
        CHECK(mi_231_as_printed(n).evaluate_at_one() == (1LL << n));
        CHECK(mi_231_as_printed(n) != mi_231(n));
    }
}

TEST_CASE("every registered formula matches the reference enumeration") {
    const auto& reg = FormulaRegistry::instance();
    REQUIRE(reg.list().size() >= 20);
    for (const FormulaInfo& f : reg.list()) {
        CAPTURE(f.id);
        const OracleSpec& s = f.oracle;
        int hi = 9;
        if (s.kind != OracleSpec::Kind::Class) hi = 7;
        else if (s.population == Population::Perm) hi = 7;
        else if (s.half_index) hi = 4;
        for (int n = f.min_arg; n <= hi; ++n) {
            CAPTURE(n);
            if (f.arity == 1) {
                REQUIRE(f.eval(n, 0) == reference(f, n, 0));
            } else {
                for (int k : second_args(f, n)) {
                    CAPTURE(k);
                    REQUIRE(f.eval(n, k) == reference(f, n, k));
                }
            }
        }
    }
}

TEST_CASE("registry lookups") {
    const auto& reg = FormulaRegistry::instance();
    CHECK(reg.find("mi_321") != nullptr);
    CHECK(reg.find("nope") == nullptr);
    CHECK(reg.eval("mi_321", 4) == mi_321(4));
    CHECK(reg.eval("seq_A", 2, 1) == seq_A(2, 1));
    CHECK_THROWS(reg.eval("nope", 1));
    for (const FormulaInfo& f : reg.list()) {
        CHECK_FALSE(f.anchor.empty());
        CHECK(f.anchor.find("Thm") == std::string::npos);
    }
}

TEST_CASE("reversal identities against the reference, n <= 9") {
    for (int n = 0; n <= 9; ++n) {
        const int top = n * (n - 1) / 2;
        const auto inv = brute::involutions(n);
        auto mi = [&](const char* p) { return brute::qgen(brute::filter(inv, {brute::word(p)}), brute::maj); };
        REQUIRE(mi("213") == brute::reversed(mi("132"), top));
        REQUIRE(mi("123") == brute::reversed(mi("321"), top));
        REQUIRE(bridge::from_q(mi("321")) == q_binomial(n, (n + 1) / 2));
    }
}

TEST_CASE("internal zeros of MI_n(132)") {
    for (int n = 3; n <= 12; ++n) {
        const int top = n * (n - 1) / 2, h = (n + 1) / 2;
        const auto c = mi_132_maj(n).q_coefficients();
        REQUIRE(static_cast<int>(c.size()) == top + 1);
        REQUIRE(c[static_cast<std::size_t>(top)] == 1);
        for (int e = 0; e < top; ++e) {
            if (e > top - h) REQUIRE(c[static_cast<std::size_t>(e)] == 0);
            else REQUIRE(c[static_cast<std::size_t>(e)] >= 1);
        }
        const auto profile = coefficient_profile(mi_132_maj(n));
        REQUIRE(profile.internal_zeros == std::vector<std::pair<int, int>>{{top - h + 1, top - 1}});
    }
}

TEST_CASE("parity of coinv over 123-avoiding involutions") {
    for (int n = 1; n <= 10; ++n) {
        brute::QPoly odd_two_fixed;
        for (auto& w : brute::filter(brute::involutions(n), {brute::word("123")})) {
            int fixed = 0;
            for (std::size_t i = 0; i < w.size(); ++i) fixed += w[i] == static_cast<int>(i + 1);
            const int c = brute::coinv(w);
            if (c % 2) {
                REQUIRE(fixed == 2);
                ++odd_two_fixed[c];
            }
        }
        const auto coeffs = bar_ii_123(n).q_coefficients();
        long long odd_mass = 0;
        for (std::size_t e = 1; e < coeffs.size(); e += 2) odd_mass += coeffs[e];
        long long ref_mass = 0;
        for (auto [e, c] : odd_two_fixed) ref_mass += c;
        REQUIRE(odd_mass == ref_mass);
        if (n % 2) REQUIRE(odd_mass == 0);
    }
}

TEST_CASE("A and B sequences") {
    CHECK(enumerate_AB(3, 0, ABVariant::A) == std::vector<std::vector<int>>{{}});
    CHECK(enumerate_AB(1, 3, ABVariant::B).empty());
    CHECK(enumerate_AB(1, 1, ABVariant::A) == std::vector<std::vector<int>>{{1}});
    for (int m = 1; m <= 5; ++m)
        for (int l = 0; l <= 5; ++l) {
            REQUIRE(enumerate_AB(m, l, ABVariant::A) == reference_AB(m, l, false));
            REQUIRE(enumerate_AB(m, l, ABVariant::B) == reference_AB(m, l, true));
            for (auto& a : reference_AB(m, l, false)) REQUIRE(in_A(m, a));
        }
    CHECK_FALSE(in_A(2, {3}));
    CHECK(in_A(2, {1, 3}));
    CHECK_FALSE(in_A(2, {2, 3}));
    CHECK(in_A(2, {2, 1, 3}));
    CHECK_FALSE(in_B(2, {1, 3}));
}

TEST_CASE("123-avoiding involutions as cycle-insertion sequences") {
    CHECK(decompose_123(P("4321")).kind == CycleInsertionSeq::Kind::Decreasing);
    CHECK(decompose_123(P("4321")).a.empty());
    CHECK(stats(rebuild_123({CycleInsertionSeq::Kind::DecreasingThenFixed, 4, {}})).coinv == 3);
    CHECK(stats(rebuild_123({CycleInsertionSeq::Kind::Decreasing, 5, {}})).coinv == 0);
    for (int n = 0; n <= 10; ++n)
        for (auto& w : brute::filter(brute::involutions(n), {brute::word("123")})) {
            const Permutation i(w);
            const CycleInsertionSeq s = decompose_123(i);
            REQUIRE(rebuild_123(s) == i);
            if (n == 0) continue;
            if (s.kind == CycleInsertionSeq::Kind::Decreasing) REQUIRE(in_B(s.m + 1, s.a));
            else REQUIRE(in_A(s.m, s.a));
        }
}

TEST_CASE("two-cycle inversion formula on 321-avoiders") {
    CHECK(inv_from_two_cycles(P("132458967")) == 5);
    CHECK(inv_from_two_cycles(Permutation::identity(5)) == 0);
    CHECK(inv_from_two_cycles(P("21")) == 1);
    for (int n = 0; n <= 10; ++n)
        for (auto& w : brute::filter(brute::involutions(n), {brute::word("321")})) {
            REQUIRE(inv_from_two_cycles(Permutation(w)) == static_cast<std::uint64_t>(brute::inv(w)));
            REQUIRE(two_cycle_count(Permutation(w)) == cycles_of(w));
        }
}

}  // TEST_SUITE
