#include "permstat/star.hpp"

#include <algorithm>
#include <stdexcept>

namespace permstat {

namespace {

using Word = std::vector<int>;

Word std_word(const Word& w) { return Permutation::standardize(w).word(); }

Word skew(const Word& x, const Word& y) {
    Word z;
    z.reserve(x.size() + y.size());
    for (int v : x) z.push_back(v + static_cast<int>(y.size()));
    z.insert(z.end(), y.begin(), y.end());
    return z;
}

Word direct(const Word& x, const Word& y) {
    Word z = x;
    for (int v : y) z.push_back(v + static_cast<int>(x.size()));
    return z;
}

// 0-based indices of the right-to-left minima of x and the left-to-right maxima of y, shifted by |x|.
std::vector<std::size_t> star_marks(const Word& x, const Word& y) {
    std::vector<std::size_t> marks;
    int lo = static_cast<int>(x.size()) + 1;
    for (std::size_t i = x.size(); i-- > 0;)
        if (x[i] < lo) {
            lo = x[i];
            marks.push_back(i);
        }
    std::reverse(marks.begin(), marks.end());
    int hi = 0;
    for (std::size_t j = 0; j < y.size(); ++j)
        if (y[j] > hi) {
            hi = y[j];
            marks.push_back(x.size() + j);
        }
    return marks;
}

Word star(const Word& x, const Word& y) {
    if (x.empty()) return y;
    if (y.empty()) return x;
    Word z = skew(x, y);
    const auto marks = star_marks(x, y);
    Word vals;
    for (auto m : marks) vals.push_back(z[m]);
    std::sort(vals.begin(), vals.end());
    for (std::size_t i = 0; i < marks.size(); ++i) z[marks[i]] = vals[i];
    return z;
}

// star on 21[X, Y] with X = x*1, Y = y*1, then drop the column |X| and the row |Y|.
Word star_remove(const Word& x, const Word& y) {
    Word z = skew(x, y);
    const auto marks = star_marks(x, y);
    const std::size_t drop_pos = x.size() - 1;
    const int drop_val = static_cast<int>(y.size());
    std::vector<std::size_t> pos;
    Word vals;
    for (auto m : marks) {
        if (m != drop_pos) pos.push_back(m);
        if (z[m] != drop_val) vals.push_back(z[m]);
    }
    std::sort(vals.begin(), vals.end());
    for (std::size_t i = 0; i < pos.size(); ++i) z[pos[i]] = vals[i];
    z.erase(z.begin() + static_cast<std::ptrdiff_t>(drop_pos));
    return std_word(z);
}

// Smallest k with s[0..k) holding the top k values, 0 if none.
std::size_t first_skew_split(const Word& s) {
    const int n = static_cast<int>(s.size());
    int lo = n + 1;
    for (std::size_t k = 1; k < s.size(); ++k) {
        lo = std::min(lo, s[k - 1]);
        if (lo == n - static_cast<int>(k) + 1) return k;
    }
    return 0;
}

Word star1(const Word& s) {
    if (s.size() == 1) return {2, 1};
    if (s[0] == 1) {
        Word rest(s.begin() + 1, s.end());
        return direct({1}, star1(std_word(rest)));
    }
    const std::size_t k = first_skew_split(s);
    if (k == 0) throw std::invalid_argument("star1_extend: " + Permutation(s).str() + " contains 213");
    const Word x = std_word(Word(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k)));
    const Word y = std_word(Word(s.begin() + static_cast<std::ptrdiff_t>(k), s.end()));
    return star_remove(star1(x), star1(y));
}

Word theta_word(const Word& s) {
    if (s.size() <= 1) return s;
    if (const std::size_t k = first_skew_split(s)) {
        const Word x = std_word(Word(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k)));
        const Word y = std_word(Word(s.begin() + static_cast<std::ptrdiff_t>(k), s.end()));
        return star(theta_word(x), theta_word(y));
    }
    if (s.back() != static_cast<int>(s.size()))
        throw std::invalid_argument("theta: " + Permutation(s).str() + " contains 132");
    return star1(theta_word(Word(s.begin(), s.end() - 1)));
}

struct Profile {
    std::vector<int> ms, u, v, p;  // ms holds 1-based indices
};

Profile profile(const Word& s) {
    Profile pr;
    const int n = static_cast<int>(s.size());
    int hi = 0;
    for (int i = n; i >= 1; --i)
        if (s[static_cast<std::size_t>(i - 1)] > hi) {
            hi = s[static_cast<std::size_t>(i - 1)];
            pr.ms.push_back(i);
        }
    std::reverse(pr.ms.begin(), pr.ms.end());
    for (std::size_t j = 0; j < pr.ms.size(); ++j) {
        const int m = pr.ms[j];
        const int val = s[static_cast<std::size_t>(m - 1)];
        pr.u.push_back(j == 0 ? m : m - pr.ms[j - 1]);
        const int next = j + 1 < pr.ms.size() ? s[static_cast<std::size_t>(pr.ms[j + 1] - 1)] : 0;
        pr.v.push_back(val - next);
        int c = 0;
        for (int i = 0; i < m; ++i)
            if (s[static_cast<std::size_t>(i)] <= val) ++c;
        pr.p.push_back(c);
    }
    return pr;
}

// Rotates the values under the j-th maximum and cuts after the k-th of those points.
std::pair<Word, Word> split_at(const Word& s, const Profile& pr, std::size_t j) {
    const int m = pr.ms[j];
    const int k = pr.p[j] - pr.u[j] + 1;
    const int top = s[static_cast<std::size_t>(m - 1)];
    std::vector<std::size_t> pos;
    Word vals;
    for (int i = 0; i < m; ++i)
        if (s[static_cast<std::size_t>(i)] <= top) {
            pos.push_back(static_cast<std::size_t>(i));
            vals.push_back(s[static_cast<std::size_t>(i)]);
        }
    std::sort(vals.begin(), vals.end());
    const std::size_t shift = vals.size() - static_cast<std::size_t>(k);
    std::rotate(vals.begin(), vals.begin() + static_cast<std::ptrdiff_t>(shift), vals.end());
    Word t = s;
    for (std::size_t i = 0; i < pos.size(); ++i) t[pos[i]] = vals[i];
    const auto cut = static_cast<std::ptrdiff_t>(pos[static_cast<std::size_t>(k - 1)] + 1);
    Word x = std_word(Word(t.begin(), t.begin() + cut));
    Word y = std_word(Word(t.begin() + cut, t.end()));
    if (star(x, y) != s) throw std::logic_error("split_star: reassembly failed on " + Permutation(s).str());
    return {std::move(x), std::move(y)};
}

std::optional<std::pair<Word, Word>> split_star_word(const Word& s) {
    const Profile pr = profile(s);
    for (std::size_t j = 0; j < pr.ms.size(); ++j)
        if (pr.u[j] + pr.v[j] >= pr.p[j] + 2) return split_at(s, pr, j);
    return std::nullopt;
}

Word insert_point_word(const Word& s, std::size_t pos, int val) {
    Word t;
    for (int w : s) t.push_back(w >= val ? w + 1 : w);
    t.insert(t.begin() + static_cast<std::ptrdiff_t>(pos), val);
    return t;
}

Word split_star1_word(const Word& s) {
    const Profile pr = profile(s);
    const std::size_t l = pr.ms.size();
    Word z;
    bool done = false;
    for (std::size_t j = 1; j + 1 < l && !done; ++j) {
        if (pr.u[j] + pr.v[j] != pr.p[j] + 1) continue;
        // first point counted by p_j that lies right of m_{j-1} and above s(m_{j+1})
        const int m = pr.ms[j];
        const int top = s[static_cast<std::size_t>(m - 1)];
        const int bottom = s[static_cast<std::size_t>(pr.ms[j + 1] - 1)];
        std::size_t a = s.size();
        for (int i = pr.ms[j - 1]; i < m; ++i) {
            const int w = s[static_cast<std::size_t>(i)];
            if (w <= top && w > bottom) {
                a = static_cast<std::size_t>(i);
                break;
            }
        }
        if (a == s.size()) throw std::logic_error("split_star1: no insertion point in " + Permutation(s).str());
        const Word s2 = insert_point_word(s, a, s[a]);
        const Profile pr2 = profile(s2);
        if (pr2.u[j] + pr2.v[j] != pr2.p[j] + 2)
            throw std::logic_error("split_star1: inserted point does not create a *-split in " + Permutation(s).str());
        const auto [xb, yb] = split_at(s2, pr2, j);
        z = skew(split_star1_word(xb), split_star1_word(yb));
        done = true;
    }
    if (!done) {
        const std::size_t n = s.size();
        if (l == 2 && n >= 2) {
            z = Permutation::identity(static_cast<int>(n - 1)).word();
        } else if (n >= 2 && s[0] == 1) {
            z = direct({1}, split_star1_word(std_word(Word(s.begin() + 1, s.end()))));
        } else {
            throw std::logic_error("split_star1: no case applies to " + Permutation(s).str());
        }
    }
    if (star1(z) != s) throw std::logic_error("split_star1: reassembly failed on " + Permutation(s).str());
    return z;
}

Word theta_inv_word(const Word& s) {
    if (s.size() <= 1) return s;
    if (auto xy = split_star_word(s)) return skew(theta_inv_word(xy->first), theta_inv_word(xy->second));
    return direct(theta_inv_word(split_star1_word(s)), {1});
}

const Permutation k213{2, 1, 3};

}  // namespace

Permutation star_product(const Permutation& x, const Permutation& y) { return Permutation(star(x.word(), y.word())); }

Permutation star1_extend(const Permutation& sigma) {
    if (sigma.empty()) throw std::invalid_argument("star1_extend: empty permutation");
    if (contains(sigma, k213)) throw std::invalid_argument("star1_extend: " + sigma.str() + " contains 213");
    return Permutation(star1(sigma.word()));
}

Permutation theta(const Permutation& sigma) {
    if (contains(sigma, Permutation{1, 3, 2})) throw std::invalid_argument("theta: " + sigma.str() + " contains 132");
    return Permutation(theta_word(sigma.word()));
}

Permutation theta_inv(const Permutation& sigma) {
    if (contains(sigma, k213)) throw std::invalid_argument("theta_inv: " + sigma.str() + " contains 213");
    return Permutation(theta_inv_word(sigma.word()));
}

RLMaxProfile rl_max_profile(const Permutation& sigma) {
    const Profile pr = profile(sigma.word());
    RLMaxProfile out;
    for (int m : pr.ms) out.maxima.push_back({m, sigma(m)});
    out.u = pr.u;
    out.v = pr.v;
    out.p = pr.p;
    return out;
}

std::optional<std::pair<Permutation, Permutation>> split_star(const Permutation& sigma) {
    if (contains(sigma, k213)) throw std::invalid_argument("split_star: " + sigma.str() + " contains 213");
    auto xy = split_star_word(sigma.word());
    if (!xy) return std::nullopt;
    return std::pair{Permutation(std::move(xy->first)), Permutation(std::move(xy->second))};
}

std::optional<Permutation> split_star1(const Permutation& sigma) {
    if (contains(sigma, k213)) throw std::invalid_argument("split_star1: " + sigma.str() + " contains 213");
    if (sigma.size() < 2 || split_star_word(sigma.word())) return std::nullopt;
    return Permutation(split_star1_word(sigma.word()));
}

}  // namespace permstat
