#include <doctest.h>

#include <limits>
#include <random>

#include "permstat/poly.hpp"
#include "permstat/serialize.hpp"
#include "support/bridge.hpp"
#include "support/brute.hpp"

using namespace permstat;

namespace {

MultiPoly Q(const char* s) { return MultiPoly::parse(s); }

MultiPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> terms(0, 5), ex(0, 4), co(-9, 9);
    MultiPoly p;
    const int k = terms(rng);
    for (int i = 0; i < k; ++i)
        p.add_term({static_cast<std::uint32_t>(ex(rng)), static_cast<std::uint32_t>(ex(rng)), static_cast<std::uint32_t>(ex(rng))},
                   co(rng));
    return p;
}

}  // namespace

TEST_SUITE("qpoly") {

TEST_CASE("arithmetic examples") {
    CHECK(Q("1 + q") * Q("1 + q^2") == Q("1 + q + q^2 + q^3"));
    CHECK(Q("1 + q") + MultiPoly{} == Q("1 + q"));
    CHECK(Q("1 + q") * Q("1 + q") == Q("1 + 2*q + q^2"));
    CHECK((Q("p*q") - Q("p*q")).is_zero());
    CHECK(Q("3*q").scaled(-2) == Q("-6*q"));
}

TEST_CASE("canonical text form") {
    CHECK(Q("2*q^2*t + 1 + p*q^3").str() == "1 + 2*q^2*t + p*q^3");
    CHECK(MultiPoly{}.str() == "0");
    CHECK(Q("1 - q").str() == "1 - q");
    CHECK(Q("0").is_zero());
    CHECK_THROWS(Q("1 + x"));
    std::mt19937 rng(7);
    for (int i = 0; i < 300; ++i) {
        const MultiPoly p = random_poly(rng);
        REQUIRE(MultiPoly::parse(p.str()) == p);
        REQUIRE(poly_from_json(to_json(p)) == p);
        REQUIRE(poly_from_json(nlohmann::json::parse(to_json(p).dump())) == p);
    }
    CHECK(to_json(Q("2*p*q^3*t + 1")).dump() == "[[0,0,0,1],[1,3,1,2]]");
}

TEST_CASE("ring laws on random sparse polynomials") {
    std::mt19937 rng(20241015);
    for (int i = 0; i < 400; ++i) {
        const MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a + b == b + a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * b == b * a);
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a - a == MultiPoly{});
        REQUIRE(a * MultiPoly::one() == a);
        REQUIRE((a * MultiPoly{}).is_zero());
    }
}

TEST_CASE("overflow is reported, not wrapped") {
    const auto big = std::numeric_limits<MultiPoly::Coeff>::max();
    CHECK_THROWS_AS(MultiPoly::constant(big) + MultiPoly::one(), std::overflow_error);
    CHECK_THROWS_AS(MultiPoly::constant(big) * MultiPoly::constant(2), std::overflow_error);
    CHECK_THROWS_AS(q_factorial(30), std::overflow_error);
}

TEST_CASE("q-analogues") {
    CHECK(q_int(0).is_zero());
    CHECK(q_int(3) == Q("1 + q + q^2"));
    CHECK(q_factorial(3) == Q("1 + 2*q + 2*q^2 + q^3"));
    CHECK(q_binomial(3, 2) == Q("1 + q + q^2"));
    CHECK(q_binomial(4, 2) == Q("1 + q + 2*q^2 + q^3 + q^4"));
    for (int n = 0; n <= 10; ++n) CHECK(q_binomial(n, 0) == MultiPoly::one());
    CHECK_THROWS(q_binomial(3, 5));
}

TEST_CASE("q-binomials: symmetry, q=1 value, Pascal against division") {
    for (int n = 0; n <= 24; ++n)
        for (int k = 0; k <= n; ++k) {
            const MultiPoly a = q_binomial(n, k);
            REQUIRE(a == q_binomial(n, n - k));
            REQUIRE(a.evaluate_at_one() == brute::binom(n, k));
            REQUIRE(a == q_binomial_by_division(n, k));
            REQUIRE(coefficient_profile(a).symmetric);
            if (n <= 16) REQUIRE(a == bridge::from_q(brute::gauss(n, k)));
        }
}

TEST_CASE("reversal and reflection") {
    CHECK(reverse_in_q(Q("1 + q + q^2"), 3) == Q("q + q^2 + q^3"));
    CHECK(reverse_in_q(MultiPoly::one(), 5) == MultiPoly::q_power(5));
    CHECK(reverse_in_q(MultiPoly::q_power(5), 5) == MultiPoly::one());
    CHECK(reverse_in_q(Q("q*t"), 2) == Q("q*t"));
    CHECK_THROWS(reverse_in_q(Q("q^4"), 3));
    CHECK(reflect(Q("1 + p*q^2*t"), 1, 2, 1) == Q("p*q^2*t + 1"));
    CHECK(reflect(Q("1"), 2, 3, 1) == Q("p^2*q^3*t"));
}

TEST_CASE("substitutions") {
    CHECK(substitute(Q("1 + q"), Substitution::q_squared()) == Q("1 + q^2"));
    CHECK(substitute(Q("q*t"), Substitution::t_shift(3)) == Q("q^4*t"));
    CHECK(substitute(Q("t^2 + q*t^4"), Substitution::t_shift(3, 2)) == Q("q^3*t^2 + q^7*t^4"));
    CHECK_THROWS(substitute(Q("t"), Substitution::t_shift(3, 2)));
    CHECK(substitute(Q("p*q*t + q"), Substitution::t_one()) == Q("p*q + q"));
    CHECK(substitute(Q("p*q*t + q"), Substitution::p_one()) == Q("q*t + q"));
    CHECK(substitute(Q("p*q*t + q^2"), Substitution::q_one()) == Q("p*t + 1"));
}

TEST_CASE("coefficient profiles") {
    const CoefficientProfile f = coefficient_profile(q_factorial(4));
    CHECK(f.symmetric);
    CHECK(f.unimodal);
    const CoefficientProfile g = coefficient_profile(Q("1 + q^3"));
    CHECK(g.internal_zeros == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK_FALSE(g.unimodal);
    const CoefficientProfile b = coefficient_profile(q_binomial(4, 2));
    CHECK(b.symmetric);
    CHECK(b.unimodal);
    // 1,1,2,1,1 fails at the second coefficient: 1*1 < 1*2
    CHECK_FALSE(b.log_concave);
    CHECK(coefficient_profile(q_binomial(4, 1)).log_concave);
    CHECK(b.internal_zeros.empty());
    CHECK(Q("1 + 2*q + q^5").q_coefficients() == std::vector<MultiPoly::Coeff>{1, 2, 0, 0, 0, 1});
}

TEST_CASE("exact division") {
    CHECK(divide_exact_q(q_factorial(5), q_factorial(3)) == q_int(4) * q_int(5));
    CHECK_THROWS(divide_exact_q(q_int(3), q_int(2)));
}

}  // TEST_SUITE
