#include <doctest.h>

#include <numeric>
#include <set>

#include "permstat/star.hpp"
#include "support/bridge.hpp"
#include "support/brute.hpp"

using namespace permstat;
using bridge::P;

namespace {

using brute::Word;

std::vector<Word> avoiders(int n, const char* pat) { return brute::filter(brute::all_perms(n), {brute::word(pat)}); }

Word standardize(const Word& w) {
    std::vector<int> idx(w.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return w[static_cast<std::size_t>(a)] < w[static_cast<std::size_t>(b)]; });
    Word out(w.size());
    for (std::size_t r = 0; r < idx.size(); ++r) out[static_cast<std::size_t>(idx[r])] = static_cast<int>(r + 1);
    return out;
}

// sigma * 1 from the definition, always splitting 21[x, y] at the largest possible cut.
Word star1_largest_cut(const Word& s) {
    const int n = static_cast<int>(s.size());
    if (n == 1) return {2, 1};
    if (s[0] == 1) {
        Word rest = standardize(Word(s.begin() + 1, s.end()));
        Word r = star1_largest_cut(rest);
        Word out{1};
        for (int v : r) out.push_back(v + 1);
        return out;
    }
    int cut = 0;
    for (int k = 1; k < n; ++k) {
        int lo = n + 1;
        for (int i = 0; i < k; ++i) lo = std::min(lo, s[static_cast<std::size_t>(i)]);
        if (lo == n - k + 1) cut = k;
    }
    REQUIRE(cut > 0);
    const Word X = star1_largest_cut(standardize(Word(s.begin(), s.begin() + cut)));
    const Word Y = star1_largest_cut(standardize(Word(s.begin() + cut, s.end())));
    // 21[X, Y], then sort the values on the marked points
    Word z;
    for (int v : X) z.push_back(v + static_cast<int>(Y.size()));
    z.insert(z.end(), Y.begin(), Y.end());
    std::vector<std::size_t> marks;
    int lo = static_cast<int>(X.size()) + 1;
    for (std::size_t i = X.size(); i-- > 0;)
        if (X[i] < lo) {
            lo = X[i];
            marks.insert(marks.begin(), i);
        }
    int hi = 0;
    for (std::size_t j = 0; j < Y.size(); ++j)
        if (Y[j] > hi) {
            hi = Y[j];
            marks.push_back(X.size() + j);
        }
    // drop column |X| and row |Y| before laying the rest out increasingly
    const std::size_t drop_pos = X.size() - 1;
    const int drop_val = static_cast<int>(Y.size());
    std::vector<std::size_t> keep;
    std::vector<int> vals;
    for (auto m : marks) {
        if (m != drop_pos) keep.push_back(m);
        if (z[m] != drop_val) vals.push_back(z[m]);
    }
    std::sort(vals.begin(), vals.end());
    for (std::size_t i = 0; i < keep.size(); ++i) z[keep[i]] = vals[i];
    z.erase(z.begin() + static_cast<std::ptrdiff_t>(drop_pos));
    return standardize(z);
}

std::set<int> shifted(const std::vector<int>& d, int by) {
    std::set<int> s;
    for (int x : d) s.insert(x + by);
    return s;
}

}  // namespace

TEST_SUITE("star") {

TEST_CASE("star product examples and laws") {
    CHECK(star_product(P("4231"), P("132")) == P("7561342"));
    CHECK(star_product(Permutation{}, P("132")) == P("132"));
    CHECK(star_product(P("132"), Permutation{}) == P("132"));
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; a + b <= 7; ++b)
            for (auto& x : avoiders(a, "213"))
                for (auto& y : avoiders(b, "213")) {
                    const Permutation xy = star_product(Permutation(x), Permutation(y));
                    const Word& w = xy.word();
                    REQUIRE_FALSE(brute::contains(w, brute::word("213")));
                    std::set<int> des = shifted(brute::descents(y), a);
                    for (int d : brute::descents(x)) des.insert(d);
                    const auto got = brute::descents(w);
                    REQUIRE(std::set<int>(got.begin(), got.end()) == des);
                    REQUIRE(standardize(Word(w.begin(), w.begin() + a)) == x);
                    Word low;
                    for (int v : w)
                        if (v <= b) low.push_back(v);
                    REQUIRE(low == y);
                    REQUIRE(inverse(xy) == star_product(inverse(Permutation(y)), inverse(Permutation(x))));
                }
}

TEST_CASE("star product is associative on 213-avoiders") {
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; a + b <= 6; ++b)
            for (int c = 1; a + b + c <= 7; ++c)
                for (auto& x : avoiders(a, "213"))
                    for (auto& y : avoiders(b, "213"))
                        for (auto& z : avoiders(c, "213")) {
                            const Permutation X(x), Y(y), Z(z);
                            REQUIRE(star_product(star_product(X, Y), Z) == star_product(X, star_product(Y, Z)));
                        }
}

TEST_CASE("star-1 extension") {
    CHECK(star1_extend(P("3421")) == P("35421"));
    CHECK(star1_extend(P("1")) == P("21"));
    for (int n = 2; n <= 9; ++n) {
        // i_{n-1} star 1 = 12[i_{n-2}, d_2]
        CHECK(star1_extend(Permutation::identity(n - 1)) == direct_sum(Permutation::identity(n - 2), Permutation::decreasing(2)));
    }
    CHECK_THROWS(star1_extend(P("213")));
    CHECK_THROWS(star1_extend(Permutation{}));
    for (int n = 1; n <= 8; ++n)
        for (auto& s : avoiders(n, "213")) {
            const Permutation sig(s);
            const Permutation out = star1_extend(sig);
            REQUIRE(out.size() == n + 1);
            REQUIRE_FALSE(brute::contains(out.word(), brute::word("213")));
            auto want = brute::descents(s);
            want.push_back(n);
            REQUIRE(brute::descents(out.word()) == want);
            REQUIRE(inverse(out) == star1_extend(inverse(sig)));
            // the output does not depend on which 21-decomposition is used
            REQUIRE(out.word() == star1_largest_cut(s));
        }
}

TEST_CASE("theta examples") {
    CHECK(theta(P("41235")) == P("35421"));
    CHECK(theta(P("6745213")) == P("7561342"));
    // the other reading of the example; its ascent set {1,3,5} is the output's descent set
    CHECK(theta(P("6745231")) == P("7563412"));
    CHECK(theta_inv(P("35421")) == P("41235"));
    CHECK_THROWS(theta(P("132")));
    CHECK_THROWS(theta_inv(P("213")));
}

TEST_CASE("theta on S_n(132), exhaustive to n = 8") {
    for (int n = 0; n <= 8; ++n) {
        std::set<Permutation> image, inv_image;
        std::size_t involutions = 0;
        const auto src = avoiders(n, "132");
        for (auto& s : src) {
            const Permutation sig(s);
            const Permutation t = theta(sig);
            REQUIRE_FALSE(brute::contains(t.word(), brute::word("213")));
            REQUIRE(brute::descents(t.word()) == brute::ascents(s));
            REQUIRE(theta(inverse(sig)) == inverse(t));
            REQUIRE(theta_inv(t) == sig);
            image.insert(t);
            if (brute::is_involution(s)) {
                ++involutions;
                REQUIRE(t.is_involution());
                inv_image.insert(t);
            }
        }
        REQUIRE(image.size() == src.size());
        REQUIRE(inv_image.size() == involutions);
        REQUIRE(inv_image.size() == brute::filter(brute::involutions(n), {brute::word("213")}).size());
    }
}

TEST_CASE("right-to-left maxima profile") {
    for (int n = 1; n <= 8; ++n)
        for (auto& s : avoiders(n, "213")) {
            const RLMaxProfile pr = rl_max_profile(Permutation(s));
            REQUIRE(pr.u.size() == pr.maxima.size());
            int su = 0, sv = 0;
            for (std::size_t i = 0; i < pr.u.size(); ++i) {
                REQUIRE(pr.u[i] >= 1);
                REQUIRE(pr.v[i] >= 1);
                REQUIRE(pr.p[i] >= 1);
                su += pr.u[i];
                sv += pr.v[i];
            }
            REQUIRE(su == pr.maxima.back().index);
            REQUIRE(sv == pr.maxima.front().value);
        }
}

TEST_CASE("splitting 213-avoiders") {
    const auto canonical = split_star(P("7561342"));
    REQUIRE(canonical.has_value());
    CHECK(canonical->first == P("21"));
    CHECK(canonical->second == P("51342"));
    CHECK(star_product(P("21"), P("51342")) == P("7561342"));
    CHECK(split_star1(P("35421")) == P("3421"));
    CHECK(split_star1(P("21")) == P("1"));
    CHECK_FALSE(split_star1(P("1")).has_value());
    for (int n = 2; n <= 9; ++n)
        for (auto& s : avoiders(n, "213")) {
            const Permutation sig(s);
            const auto xy = split_star(sig);
            const auto z = split_star1(sig);
            REQUIRE(xy.has_value() != z.has_value());
            if (xy) {
                REQUIRE_FALSE(xy->first.empty());
                REQUIRE_FALSE(xy->second.empty());
                REQUIRE(star_product(xy->first, xy->second) == sig);
            } else {
                REQUIRE(star1_extend(*z) == sig);
            }
        }
}

}  // TEST_SUITE
