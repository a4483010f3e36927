#include <doctest.h>

#include "permstat/conjectures.hpp"
#include "permstat/serialize.hpp"
#include "support/bridge.hpp"
#include "support/brute.hpp"

using namespace permstat;
using bridge::P;

namespace {

const ConjectureCell& cell(const ConjectureReport& r, const std::string& label) {
    for (auto& c : r.cells)
        if (c.label == label) return c;
    FAIL("no cell " << label);
    return r.cells.front();
}

}  // namespace

TEST_SUITE("conjectures") {

TEST_CASE("II-Wilf classes are the symmetry orbits") {
    const ConjectureReport r = check_ii_wilf_symmetry_classes(3, 10);
    CHECK(r.holds());
    CHECK(cell(r, "len=3").note == "classes: {123} {132,213} {231,312} {321}");
}

TEST_CASE("12[231,231] and 12[312,231] separate at n = 8 but not before") {
    const ConjectureReport r = check_ii_wilf_separation(8);
    CHECK(r.holds());
    CHECK(r.proven_cells_hold());
    REQUIRE(r.cells.size() == 1);
    REQUIRE(r.cells[0].witness.has_value());
    CHECK(r.cells[0].witness->left == "231564");
    CHECK(r.cells[0].witness->right == "312564");
    CHECK_FALSE(check_ii_wilf_separation(7).holds());

    // reference inv distributions at n = 8
    const auto inv8 = brute::involutions(8);
    auto ii = [&](const char* p) { return brute::qgen(brute::filter(inv8, {brute::word(p)}), brute::inv); };
    const auto a = ii("231564"), b = ii("312564");
    CHECK(a != b);
    CHECK(bridge::from_q(a) == r.cells[0].witness->left_poly);
    CHECK(bridge::from_q(b) == r.cells[0].witness->right_poly);
}

TEST_CASE("MI-Wilf classes are {pi, pi^-1}") {
    const ConjectureReport r = check_mi_wilf_classes(3, 9);
    CHECK(r.holds());
    CHECK(cell(r, "len=3").note == "classes: {123} {132} {213} {231,312} {321}");
}

TEST_CASE("symmetry pairs") {
    CHECK(symmetry_pair(1, 3) == std::pair{P("132"), P("213")});
    CHECK(symmetry_pair(0, 3) == std::pair{P("321"), P("123")});
    CHECK(symmetry_pair(2, 5) == std::pair{P("12543"), P("32145")});
    CHECK_THROWS(symmetry_pair(3, 3));

    // reference check of one pair over S_n and I_n
    for (int n = 0; n <= 7; ++n) {
        const int top = n * (n - 1) / 2;
        for (bool invo : {false, true}) {
            const auto pop = invo ? brute::involutions(n) : brute::all_perms(n);
            const auto a = brute::qgen(brute::filter(pop, {brute::word("1243")}), brute::maj);
            const auto b = brute::qgen(brute::filter(pop, {brute::word("3214")}), brute::maj);
            REQUIRE(a == brute::reversed(b, top));
        }
    }
    CHECK(check_symmetry_pairs(5, 7, Population::Perm).holds());
    CHECK(check_symmetry_pairs(6, 8, Population::Inv).holds());
    CHECK(check_symmetry_pair(1, 4, 7, Population::Perm).cells.size() == 1);
}

TEST_CASE("132 vs 231 and 213 vs 312 inflation pairs") {
    const ConjectureReport r = check_dokos_pairs(2, 2, 7);
    CHECK(r.holds());
    CHECK(r.proven_cells_hold());
    CHECK(cell(r, "m=1 k=1 132 vs 231").proven);
    CHECK_FALSE(cell(r, "m=1 k=2 1432 vs 3421").proven);
    // maj over S_n of 132 and 231 agree, by the reference
    for (int n = 0; n <= 7; ++n) {
        const auto all = brute::all_perms(n);
        REQUIRE(brute::qgen(brute::filter(all, {brute::word("132")}), brute::maj) ==
                brute::qgen(brute::filter(all, {brute::word("231")}), brute::maj));
    }
}

TEST_CASE("132[i_m,1,d_k] and 312[d_m,1,i_k] are complements, so their maj genfuns reverse") {
    for (int n = 0; n <= 7; ++n) {
        const int top = n * (n - 1) / 2;
        const auto all = brute::all_perms(n);
        // (132[i_m,1,d_k], 312[d_m,1,i_k]) for (m,k) = (1,1), (1,2), (2,1), (2,2)
        for (auto [a, b] : {std::pair{"132", "312"}, std::pair{"1432", "4123"}, std::pair{"1243", "4312"}, std::pair{"12543", "54123"}}) {
            const auto left = brute::qgen(brute::filter(all, {brute::word(a)}), brute::maj);
            const auto right = brute::qgen(brute::filter(all, {brute::word(b)}), brute::maj);
            REQUIRE(left == brute::reversed(right, top));
            REQUIRE(brute::complement(brute::word(a)) == brute::word(b));
        }
    }
    const ConjectureReport r = explore_r0_pairs(3, 7, Population::Perm);
    CHECK(r.holds());
    CHECK(cell(r, "len=3").note == "reversal pairs: 123/321; others: 132/231 213/312");
}

TEST_CASE("runner, ids and serialization") {
    CHECK(conjecture_ids() ==
          std::vector<std::string>{"ii-wilf", "ii-wilf-separation", "mi-wilf", "conj", "conj-invo", "dokos", "r0-pairs"});
    ConjectureGrid g;
    g.max_len = 3;
    g.n_max = 8;
    const ConjectureReport a = run_conjecture("ii-wilf", g);
    CHECK(a.id == "ii-wilf");
    CHECK_FALSE(a.seconds.has_value());
    CHECK(to_json(a).dump() == to_json(run_conjecture("ii-wilf", g, {Caps{}, ParallelOptions{3}})).dump());
    CHECK(a.human().find("holds") != std::string::npos);
    CHECK_THROWS(run_conjecture("nope", g));
}

}  // TEST_SUITE
