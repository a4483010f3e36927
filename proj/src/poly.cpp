#include "permstat/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace permstat {

namespace checked {

MultiPoly::Coeff add(MultiPoly::Coeff a, MultiPoly::Coeff b) {
    MultiPoly::Coeff r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in addition");
    return r;
}

MultiPoly::Coeff mul(MultiPoly::Coeff a, MultiPoly::Coeff b) {
    MultiPoly::Coeff r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in multiplication");
    return r;
}

}  // namespace checked

namespace {

std::uint32_t exp_add(std::uint32_t a, std::uint32_t b) {
    std::uint32_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
    return r;
}

std::uint32_t exp_from(long long v) {
    if (v < 0 || v > std::numeric_limits<std::uint32_t>::max()) throw std::overflow_error("exponent out of range");
    return static_cast<std::uint32_t>(v);
}

}  // namespace

MultiPoly MultiPoly::constant(Coeff c) {
    MultiPoly r;
    r.add_term({}, c);
    return r;
}

MultiPoly MultiPoly::monomial(Coeff c, std::uint32_t ep, std::uint32_t eq, std::uint32_t et) {
    MultiPoly r;
    r.add_term({ep, eq, et}, c);
    return r;
}

MultiPoly::Coeff MultiPoly::coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

void MultiPoly::add_term(Monomial m, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second = checked::add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, checked::mul(c, -1));
    return *this;
}

MultiPoly MultiPoly::operator-() const { return scaled(-1); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term({exp_add(ma.p, mb.p), exp_add(ma.q, mb.q), exp_add(ma.t, mb.t)}, checked::mul(ca, cb));
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly MultiPoly::scaled(Coeff c) const {
    MultiPoly r;
    for (const auto& [m, x] : terms_) r.add_term(m, checked::mul(x, c));
    return r;
}

int MultiPoly::degree_p() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.p));
    return d;
}

int MultiPoly::degree_q() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.q));
    return d;
}

int MultiPoly::degree_t() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.t));
    return d;
}

MultiPoly::Coeff MultiPoly::evaluate_at_one() const {
    Coeff s = 0;
    for (const auto& [m, c] : terms_) s = checked::add(s, c);
    return s;
}

std::vector<MultiPoly::Coeff> MultiPoly::q_coefficients() const {
    std::vector<Coeff> a(static_cast<std::size_t>(degree_q() + 1), 0);
    for (const auto& [m, c] : terms_) a[m.q] = checked::add(a[m.q], c);
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c < 0;
        // magnitude as unsigned so INT64_MIN prints correctly
        const auto mag = neg ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
        if (first) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        first = false;
        std::string vars;
        auto var = [&](char name, std::uint32_t e) {
            if (e == 0) return;
            if (!vars.empty()) vars += '*';
            vars += name;
            if (e > 1) vars += '^' + std::to_string(e);
        };
        var('p', m.p);
        var('q', m.q);
        var('t', m.t);
        if (vars.empty()) out += std::to_string(mag);
        else if (mag == 1) out += vars;
        else out += std::to_string(mag) + "*" + vars;
    }
    return out;
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    MultiPoly run() {
        MultiPoly r;
        skip();
        if (s_.empty()) fail("empty input");
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++i_;
        } else if (peek() == '+') {
            ++i_;
        }
        for (;;) {
            auto [m, c] = term();
            r.add_term(m, neg ? checked::mul(c, -1) : c);
            skip();
            if (i_ == s_.size()) break;
            if (peek() == '+') neg = false;
            else if (peek() == '-') neg = true;
            else fail("expected '+' or '-'");
            ++i_;
        }
        return r;
    }

private:
    std::pair<Monomial, MultiPoly::Coeff> term() {
        skip();
        Monomial m;
        MultiPoly::Coeff c = 1;
        bool any = false;
        if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
            c = number();
            any = true;
            skip();
            if (i_ < s_.size() && peek() == '*') {
                ++i_;
                skip();
                factor(m);
            } else if (i_ < s_.size() && is_var(peek())) {
                factor(m);
            }
        } else {
            factor(m);
            any = true;
        }
        if (!any) fail("expected a term");
        for (;;) {
            skip();
            if (i_ < s_.size() && peek() == '*') {
                ++i_;
                skip();
                factor(m);
            } else {
                break;
            }
        }
        return {m, c};
    }

    void factor(Monomial& m) {
        if (i_ >= s_.size() || !is_var(peek())) fail("expected p, q or t");
        const char v = s_[i_++];
        std::uint32_t e = 1;
        skip();
        if (i_ < s_.size() && peek() == '^') {
            ++i_;
            skip();
            e = exp_from(number());
        }
        std::uint32_t& slot = v == 'p' ? m.p : v == 'q' ? m.q : m.t;
        slot = exp_add(slot, e);
    }

    MultiPoly::Coeff number() {
        if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        MultiPoly::Coeff v = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek())))
            v = checked::add(checked::mul(v, 10), s_[i_++] - '0');
        return v;
    }

    static bool is_var(char c) { return c == 'p' || c == 'q' || c == 't'; }
    char peek() const { return s_[i_]; }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    [[noreturn]] void fail(const char* what) const {
        throw std::invalid_argument(std::string("polynomial parse error at offset ") + std::to_string(i_) + ": " + what + " in '" + std::string(s_) + "'");
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) {
    std::size_t a = 0, b = text.size();
    while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
    if (text.substr(a, b - a) == "0") return {};
    return PolyParser(text.substr(a, b - a)).run();
}

MultiPoly q_int(int n) {
    if (n < 0) throw std::invalid_argument("q_int: negative argument");
    MultiPoly r;
    for (int i = 0; i < n; ++i) r.add_term({0, static_cast<std::uint32_t>(i), 0}, 1);
    return r;
}

MultiPoly q_factorial(int n) {
    if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
    MultiPoly r = MultiPoly::one();
    for (int i = 2; i <= n; ++i) r *= q_int(i);
    return r;
}

MultiPoly q_binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("q_binomial: need 0 <= k <= n");
    // row[j] holds [m j]_q while m runs up to n
    std::vector<MultiPoly> row(static_cast<std::size_t>(k) + 1);
    row[0] = MultiPoly::one();
    for (int m = 1; m <= n; ++m)
        for (int j = std::min(m, k); j >= 1; --j)
            row[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j - 1)] + MultiPoly::q_power(static_cast<std::uint32_t>(j)) * row[static_cast<std::size_t>(j)];
    return row[static_cast<std::size_t>(k)];
}

MultiPoly q_binomial_by_division(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("q_binomial: need 0 <= k <= n");
    MultiPoly b = MultiPoly::one();
    for (int i = 1; i <= k; ++i) b = divide_exact_q(b * q_int(n - k + i), q_int(i));
    return b;
}

MultiPoly divide_exact_q(const MultiPoly& num, const MultiPoly& den) {
    for (const auto* poly : {&num, &den})
        for (const auto& [m, c] : poly->terms())
            if (m.p != 0 || m.t != 0) throw std::invalid_argument("divide_exact_q: polynomials must be in q only");
    if (den.is_zero()) throw std::domain_error("divide_exact_q: division by zero");
    auto a = num.q_coefficients();
    const auto d = den.q_coefficients();
    const std::size_t dd = d.size() - 1;
    if (a.size() < d.size()) {
        if (num.is_zero()) return {};
        throw std::domain_error("divide_exact_q: not divisible");
    }
    std::vector<MultiPoly::Coeff> quot(a.size() - dd, 0);
    for (std::size_t i = a.size(); i-- > dd;) {
        if (a[i] == 0) continue;
        if (a[i] % d[dd] != 0) throw std::domain_error("divide_exact_q: not divisible");
        const auto c = a[i] / d[dd];
        quot[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) a[i - dd + j] = checked::add(a[i - dd + j], checked::mul(-c, d[j]));
    }
    for (auto v : a)
        if (v != 0) throw std::domain_error("divide_exact_q: not divisible");
    MultiPoly r;
    for (std::size_t i = 0; i < quot.size(); ++i) r.add_term({0, static_cast<std::uint32_t>(i), 0}, quot[i]);
    return r;
}

MultiPoly reverse_in_q(const MultiPoly& p, int n) {
    MultiPoly r;
    for (const auto& [m, c] : p.terms()) {
        if (m.p != 0) throw std::invalid_argument("reverse_in_q: polynomial involves p");
        if (static_cast<long long>(m.q) > n) throw std::invalid_argument("reverse_in_q: q-degree exceeds N");
        r.add_term({0, static_cast<std::uint32_t>(n - static_cast<int>(m.q)), m.t}, c);
    }
    return r;
}

MultiPoly reflect(const MultiPoly& poly, int np, int nq, int nt) {
    MultiPoly r;
    for (const auto& [m, c] : poly.terms()) {
        const long long ep = np - static_cast<long long>(m.p), eq = nq - static_cast<long long>(m.q), et = nt - static_cast<long long>(m.t);
        if (ep < 0 || eq < 0 || et < 0) throw std::invalid_argument("reflect: exponent exceeds the reflection bound");
        r.add_term({exp_from(ep), exp_from(eq), exp_from(et)}, c);
    }
    return r;
}

MultiPoly substitute(const MultiPoly& poly, Substitution s) {
    using K = Substitution::Kind;
    if (s.kind == K::TShift && (s.num < 0 || s.den <= 0)) throw std::invalid_argument("substitute: t -> q^a t needs a >= 0");
    MultiPoly r;
    for (const auto& [m, c] : poly.terms()) {
        Monomial x = m;
        switch (s.kind) {
            case K::QSquared: x.q = exp_from(2LL * m.q); break;
            case K::TShift: {
                const long long prod = static_cast<long long>(s.num) * m.t;
                if (prod % s.den != 0)
                    throw std::invalid_argument("substitute: t exponent " + std::to_string(m.t) + " gives a fractional q shift");
                x.q = exp_add(m.q, exp_from(prod / s.den));
                break;
            }
            case K::TOne: x.t = 0; break;
            case K::POne: x.p = 0; break;
            case K::QOne: x.q = 0; break;
        }
        r.add_term(x, c);
    }
    return r;
}

CoefficientProfile coefficient_profile(const MultiPoly& poly) {
    CoefficientProfile out;
    const auto a = poly.q_coefficients();
    const std::size_t d = a.size();
    for (std::size_t i = 0; i < d; ++i)
        if (a[i] != a[d - 1 - i]) out.symmetric = false;
    std::size_t i = 0;
    while (i + 1 < d && a[i] <= a[i + 1]) ++i;
    while (i + 1 < d && a[i] >= a[i + 1]) ++i;
    out.unimodal = d == 0 || i + 1 >= d;
    for (std::size_t j = 1; j + 1 < d; ++j) {
        const __int128 lhs = static_cast<__int128>(a[j]) * a[j];
        const __int128 rhs = static_cast<__int128>(a[j - 1]) * a[j + 1];
        if (lhs < rhs) out.log_concave = false;
    }
    std::size_t lo = 0;
    while (lo < d && a[lo] == 0) ++lo;
    for (std::size_t j = lo; j < d; ++j) {
        if (a[j] != 0) continue;
        std::size_t k = j;
        while (k + 1 < d && a[k + 1] == 0) ++k;
        out.internal_zeros.emplace_back(static_cast<int>(j), static_cast<int>(k));
        j = k;
    }
    return out;
}

}  // namespace permstat
