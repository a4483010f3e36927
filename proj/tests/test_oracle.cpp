#include <doctest.h>

#include <set>

#include "permstat/oracle.hpp"
#include "support/bridge.hpp"
#include "support/brute.hpp"

using namespace permstat;
using bridge::P;

namespace {

AvoidanceClass cls(Population pop, int n, const std::string& pats) { return {pop, n, parse_pattern_list(pats)}; }

const std::vector<std::string> kLen3{"123", "132", "213", "231", "312", "321"};

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("enumeration examples") {
    const auto i3 = enumerate(Population::Inv, 3);
    std::set<Permutation> got(i3.begin(), i3.end());
    CHECK(got == std::set<Permutation>{P("123"), P("132"), P("213"), P("321")});
    CHECK(enumerate(Population::Fpf, 3).empty());
    CHECK(enumerate(Population::Inv, 4).size() == 10);
    CHECK(enumerate(Population::Inv, 0).size() == 1);
    CHECK(enumerate(Population::Fpf, 0).size() == 1);
}

TEST_CASE("populations match the reference generators") {
    for (int n = 0; n <= 9; ++n) {
        auto as_set = [](const std::vector<brute::Word>& ws) {
            std::set<Permutation> s;
            for (auto& w : ws) s.emplace(w);
            return s;
        };
        auto lib = [](Population pop, int n) {
            const auto v = enumerate(pop, n);
            std::set<Permutation> s(v.begin(), v.end());
            REQUIRE(s.size() == v.size());
            return s;
        };
        REQUIRE(lib(Population::Inv, n) == as_set(brute::involutions(n)));
        REQUIRE(lib(Population::Fpf, n) == as_set(brute::fpf_involutions(n)));
        if (n <= 8) REQUIRE(lib(Population::Perm, n) == as_set(brute::all_perms(n)));
    }
    // telephone numbers
    long long t0 = 1, t1 = 1;
    for (int n = 2; n <= 14; ++n) {
        const long long t = t1 + (n - 1) * t0;
        t0 = t1;
        t1 = t;
    }
    std::uint64_t count = 0;
    for_each_member(Population::Inv, 14, [&](const Permutation&) { ++count; });
    CHECK(count == static_cast<std::uint64_t>(t1));
    CHECK(t1 == 2390480);
}

TEST_CASE("chunks partition the population") {
    for (Population pop : {Population::Perm, Population::Inv, Population::Fpf})
        for (int n = 0; n <= 7; ++n) {
            std::vector<Permutation> serial, chunked;
            for_each_member(pop, n, [&](const Permutation& p) { serial.push_back(p); });
            for (int c = 0; c < chunk_count(pop, n); ++c)
                for_each_in_chunk(pop, n, c, [&](const Permutation& p) { chunked.push_back(p); });
            REQUIRE(serial == chunked);
        }
}

TEST_CASE("genfun examples") {
    CHECK(genfun(cls(Population::Inv, 3, "321"), Weight::single(Stat::Maj)) == MultiPoly::parse("1 + q + q^2"));
    CHECK(genfun(cls(Population::Inv, 3, "132"), Weight::single(Stat::Inv)) == MultiPoly::parse("1 + q + q^3"));
    CHECK(genfun(cls(Population::Inv, 3, "123"), Weight::single(Stat::Coinv)) == MultiPoly::parse("1 + 2*q^2"));
    CHECK(genfun(cls(Population::Inv, 0, "123"), Weight::joint()) == MultiPoly::one());
    CHECK(genfun(cls(Population::Fpf, 5, "123"), Weight::joint()).is_zero());
    CHECK(genfun(cls(Population::Inv, 4, "1"), Weight::joint()).is_zero());
}

TEST_CASE("weights") {
    CHECK(Weight::parse("inv") == Weight::single(Stat::Inv));
    CHECK(Weight::parse("joint") == Weight::joint());
    CHECK(Weight::parse("p:coinv,q:comaj,t:asc") == Weight::bar_joint());
    CHECK_FALSE(Weight::parse("nonsense").has_value());
    CHECK(Weight::parse(Weight::joint().name()) == Weight::joint());
}

TEST_CASE("genfun agrees with the reference on every single pattern up to length 3") {
    for (auto& pat : kLen3) {
        const std::vector<brute::Word> pats{brute::word(pat)};
        for (int n = 0; n <= 9; ++n) {
            const auto members = brute::filter(brute::involutions(n), pats);
            brute::JointPoly joint;
            for (auto& w : members) ++joint[{brute::inv(w), brute::maj(w), brute::des(w)}];
            const auto c = cls(Population::Inv, n, pat);
            REQUIRE(genfun(c, Weight::joint()) == bridge::from_joint(joint));
            REQUIRE(genfun(c, Weight::single(Stat::Coinv)) == bridge::from_q(brute::qgen(members, brute::coinv)));
            REQUIRE(genfun(c, Weight::single(Stat::Comaj)) == bridge::from_q(brute::qgen(members, brute::comaj)));
            const auto fpf = brute::filter(brute::fpf_involutions(n), pats);
            REQUIRE(genfun(cls(Population::Fpf, n, pat), Weight::single(Stat::Inv)) == bridge::from_q(brute::qgen(fpf, brute::inv)));
        }
        for (int n = 0; n <= 7; ++n) {
            const auto members = brute::filter(brute::all_perms(n), pats);
            REQUIRE(genfun(cls(Population::Perm, n, pat), Weight::single(Stat::Maj)) ==
                    bridge::from_q(brute::qgen(members, brute::maj)));
        }
    }
}

TEST_CASE("MacMahon: inv and maj over S_n both give [n]_q!") {
    for (int n = 0; n <= 8; ++n) {
        const AvoidanceClass all{Population::Perm, n, {}};
        REQUIRE(genfun(all, Weight::single(Stat::Inv)) == q_factorial(n));
        REQUIRE(genfun(all, Weight::single(Stat::Maj)) == q_factorial(n));
    }
}

TEST_CASE("single-pattern involution counts") {
    for (int n = 0; n <= 12; ++n) {
        for (auto& pat : kLen3) {
            const std::uint64_t want = (pat == "231" || pat == "312") ? (n == 0 ? 1 : 1ULL << (n - 1))
                                                                      : static_cast<std::uint64_t>(brute::binom(n, (n + 1) / 2));
            REQUIRE(cls(Population::Inv, n, pat).size() == want);
        }
    }
    for (int m = 1; m <= 6; ++m) {
        CHECK(cls(Population::Fpf, 2 * m, "123").size() == static_cast<std::uint64_t>(brute::binom(2 * m - 1, m)));
        CHECK(cls(Population::Fpf, 2 * m, "321").size() == static_cast<std::uint64_t>(brute::binom(2 * m, m) / (m + 1)));
    }
}

TEST_CASE("S_n(231,312) = I_n(231) = I_n(312) as sets") {
    for (int n = 0; n <= 9; ++n) {
        const auto a = cls(Population::Perm, n, "231,312").members();
        const auto b = cls(Population::Inv, n, "231").members();
        const auto c = cls(Population::Inv, n, "312").members();
        REQUIRE(std::set<Permutation>(a.begin(), a.end()) == std::set<Permutation>(b.begin(), b.end()));
        REQUIRE(std::set<Permutation>(b.begin(), b.end()) == std::set<Permutation>(c.begin(), c.end()));
    }
}

TEST_CASE("members avoid every pattern") {
    for (auto& m : cls(Population::Inv, 10, "2143,321").members()) {
        REQUIRE(m.is_involution());
        REQUIRE_FALSE(brute::contains(m.word(), brute::word("2143")));
        REQUIRE_FALSE(brute::contains(m.word(), brute::word("321")));
    }
}

TEST_CASE("parallel chunking gives bit-identical results") {
    for (auto& pat : {"132", "2413", "1234"}) {
        const auto c = cls(Population::Inv, 11, pat);
        const MultiPoly one = genfun(c, Weight::joint(), {}, {1});
        for (int jobs : {2, 3, 8}) REQUIRE(genfun(c, Weight::joint(), {}, {jobs}) == one);
    }
    const auto c = cls(Population::Perm, 8, "231");
    CHECK(genfun(c, Weight::joint(), {}, {1}) == genfun(c, Weight::joint(), {}, {4}));
}

TEST_CASE("genfun_many and snapshots agree with single runs") {
    const std::vector<std::vector<Permutation>> sets{parse_pattern_list("123"), parse_pattern_list("132,213"), {}};
    const auto many = genfun_many(Population::Inv, 9, sets, Weight::joint());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const AvoidanceClass c{Population::Inv, 9, sets[i]};
        REQUIRE(many[i] == genfun(c, Weight::joint()));
        REQUIRE(snapshot(c).genfun(Weight::joint()) == many[i]);
    }
    SnapshotCache cache;
    const AvoidanceClass c{Population::Inv, 8, parse_pattern_list("321")};
    CHECK(cache.get(c) == cache.get(c));
    // two-cycle filters partition the class
    MultiPoly sum;
    for (int k = 0; k <= 4; ++k) sum += cache.get(c)->genfun(Weight::joint(), {TwoCycleFilter::Kind::Exactly, k});
    CHECK(sum == cache.get(c)->genfun(Weight::joint()));
}

TEST_CASE("caps are enforced") {
    CHECK_THROWS_AS(enumerate(Population::Perm, 11), CapExceeded);
    CHECK_THROWS_AS(genfun(cls(Population::Inv, 15, "123"), Weight::joint()), CapExceeded);
    CHECK_NOTHROW(genfun(cls(Population::Perm, 11, "123"), Weight::joint(), Caps{11, 14}));
    CHECK(parse_population("fpf") == Population::Fpf);
    CHECK_FALSE(parse_population("all").has_value());
}

TEST_CASE("Wilf fingerprints of length-3 singletons") {
    std::vector<std::vector<Permutation>> sets;
    for (auto& p : kLen3) sets.push_back(parse_pattern_list(p));
    auto render = [&](const std::vector<std::vector<int>>& classes) {
        std::vector<std::set<std::string>> out;
        for (auto& c : classes) {
            std::set<std::string> s;
            for (int i : c) s.insert(kLen3[static_cast<std::size_t>(i)]);
            out.push_back(s);
        }
        return std::set<std::set<std::string>>(out.begin(), out.end());
    };
    using S = std::set<std::set<std::string>>;
    CHECK(render(wilf_fingerprint(sets, Population::Inv, 10, Weight::single(Stat::Inv))) ==
          S{{"123"}, {"132", "213"}, {"231", "312"}, {"321"}});
    CHECK(render(wilf_fingerprint(sets, Population::Inv, 10, Weight::single(Stat::Maj))) ==
          S{{"123"}, {"132"}, {"213"}, {"231", "312"}, {"321"}});
    CHECK(render(wilf_fingerprint(sets, Population::Inv, 10, Weight::count())) ==
          S{{"123", "132", "213", "321"}, {"231", "312"}});
}

}  // TEST_SUITE
