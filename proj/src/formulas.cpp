#include "permstat/formulas.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

#include "permstat/involution123.hpp"
#include "permstat/tables.hpp"

namespace permstat {

namespace {

// Shared memo for every formula family. Values are computed without the lock held so that a
// recurrence can call back into the memo for smaller arguments.
class Memo {
public:
    using Key = std::tuple<std::string_view, int, int>;

    template <class Fn>
    MultiPoly get(std::string_view family, int a, int b, Fn compute) {
        const Key key{family, a, b};
        {
            std::shared_lock lock(mu_);
            if (auto it = values_.find(key); it != values_.end()) return it->second;
        }
        MultiPoly v = compute();
        std::unique_lock lock(mu_);
        return values_.try_emplace(key, std::move(v)).first->second;
    }

private:
    std::shared_mutex mu_;
    std::map<Key, MultiPoly> values_;
};

Memo& memo() {
    static Memo m;
    return m;
}

void need(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

MultiPoly qpow(long long e) { return MultiPoly::q_power(static_cast<std::uint32_t>(e)); }

long long choose2(long long n) { return n * (n - 1) / 2; }

}  // namespace

MultiPoly catalan_q(int n) {
    need(n >= 0, "catalan_q: n must be >= 0");
    return memo().get("catalan_q", n, 0, [n] {
        if (n == 0) return MultiPoly::one();
        for (int i = 0; i < n; ++i) catalan_q(i);
        MultiPoly r;
        for (int k = 0; k < n; ++k) r += qpow(k) * catalan_q(k) * catalan_q(n - k - 1);
        return r;
    });
}

MultiPoly ii_231(int n) {
    need(n >= 0, "ii_231: n must be >= 0");
    return memo().get("ii_231", n, 0, [n] {
        if (n == 0) return MultiPoly::one();
        for (int i = 0; i < n; ++i) ii_231(i);
        MultiPoly r;
        for (int j = 1; j <= n; ++j) r += qpow(choose2(j)) * ii_231(n - j);
        return r;
    });
}

MultiPoly bar_ifi_132(int m) {
    need(m >= 0, "bar_ifi_132: m must be >= 0");
    return substitute(catalan_q(m), Substitution::q_squared());
}

MultiPoly bar_ifi_213(int m) { return bar_ifi_132(m); }

MultiPoly bar_ii_132(int n) {
    need(n >= 0, "bar_ii_132: n must be >= 0");
    return memo().get("bar_ii_132", n, 0, [n] {
        if (n == 0) return MultiPoly::one();
        for (int i = 0; i < n; ++i) bar_ii_132(i);
        MultiPoly r = qpow(n - 1) * bar_ii_132(n - 1);
        for (int k = 1; k <= n / 2; ++k) r += qpow(2 * (k - 1)) * bar_ifi_132(k - 1) * bar_ii_132(n - 2 * k);
        return r;
    });
}

MultiPoly ifi_321(int m) {
    need(m >= 0, "ifi_321: m must be >= 0");
    return memo().get("ifi_321", m, 0, [m] {
        if (m == 0) return MultiPoly::one();
        for (int i = 0; i < m; ++i) ifi_321(i);
        MultiPoly r;
        for (int k = 1; k <= m; ++k) r += qpow(2 * k - 1) * ifi_321(k - 1) * ifi_321(m - k);
        return r;
    });
}

MultiPoly ii_321(int n) {
    need(n >= 0, "ii_321: n must be >= 0");
    return memo().get("ii_321", n, 0, [n] {
        if (n <= 1) return MultiPoly::one();
        for (int i = 0; i < n; ++i) ii_321(i);
        MultiPoly r = n % 2 == 0 ? ifi_321(n / 2) : MultiPoly{};
        for (int k = 0; k <= (n + 1) / 2 - 1; ++k) r += ifi_321(k) * ii_321(n - 2 * k - 1);
        return r;
    });
}

MultiPoly seq_A(int m, int l) {
    need(m >= 1 && l >= 0, "seq_A: need m >= 1 and l >= 0");
    return memo().get("seq_A", m, l, [m, l] {
        if (l == 0) return MultiPoly::one();
        MultiPoly r = seq_A(m + 1, l - 1);
        for (int i = 2; i <= m; ++i) r += qpow(i - 1) * seq_A(i, l - 1);
        return r;
    });
}

MultiPoly seq_B(int m, int l) {
    need(m >= 1 && l >= 0, "seq_B: need m >= 1 and l >= 0");
    if (m == 1) return {};
    if (l == 0) return MultiPoly::one();
    return memo().get("seq_B", m, l, [m, l] {
        MultiPoly r;
        for (int i = 2; i <= m; ++i) r += qpow(i - 1) * seq_A(i, l - 1);
        return r;
    });
}

MultiPoly bar_ii_123(int n) {
    need(n >= 0, "bar_ii_123: n must be >= 0");
    if (n == 0) return MultiPoly::one();
    return memo().get("bar_ii_123", n, 0, [n] {
        const auto sq = Substitution::q_squared();
        const int k = n / 2;
        MultiPoly r;
        if (n % 2 == 1) {
            for (int j = 1; j <= k; ++j) r += qpow(2 * j) * substitute(seq_A(2 * j + 1, k - j), sq);
            for (int j = 0; j <= k; ++j) r += substitute(seq_B(2 * j + 2, k - j), sq);
        } else {
            for (int j = 1; j <= k; ++j) r += substitute(seq_B(2 * j + 1, k - j), sq);
            for (int j = 1; j <= k; ++j) r += qpow(2 * j - 1) * substitute(seq_A(2 * j, k - j), sq);
        }
        return r;
    });
}

MultiPoly bar_ifi_123(int m) {
    need(m >= 0, "bar_ifi_123: m must be >= 0");
    if (m == 0) return MultiPoly::one();
    MultiPoly r;
    for (int j = 1; j <= m; ++j) r += substitute(seq_B(2 * j + 1, m - j), Substitution::q_squared());
    return r;
}

MultiPoly mi_231(int n) {
    need(n >= 0, "mi_231: n must be >= 0");
    MultiPoly r = MultiPoly::one();
    for (int k = 1; k <= n - 1; ++k) r *= MultiPoly::one() + qpow(k);
    return r;
}

MultiPoly mi_231_as_printed(int n) {
    need(n >= 0, "mi_231: n must be >= 0");
    MultiPoly r = MultiPoly::one();
    for (int k = 0; k <= n - 1; ++k) r *= MultiPoly::one() + qpow(k);
    return r;
}

MultiPoly mfi_132(int m) {
    need(m >= 0, "mfi_132: m must be >= 0");
    return memo().get("mfi_132", m, 0, [m] {
        if (m == 0) return MultiPoly::one();
        for (int i = 0; i < m; ++i) mfi_132(i);
        MultiPoly r = substitute(mfi_132(m - 1), Substitution::t_shift(1));
        for (int k = 1; k <= m - 1; ++k) {
            // asc of a fixed-point-free 132-avoider is even, so the half shift stays integral
            r += MultiPoly::monomial(1, 0, static_cast<std::uint32_t>(2 * m + k - 1), 2) *
                 substitute(mfi_132(k), Substitution::t_shift(2 * m - 2 * k - 1, 2)) *
                 substitute(mfi_132(m - k - 1), Substitution::t_shift(k + 1));
        }
        return r;
    });
}

MultiPoly mi_132(int n) {
    need(n >= 0, "mi_132: n must be >= 0");
    return memo().get("mi_132", n, 0, [n] {
        if (n <= 1) return MultiPoly::one();
        for (int i = 0; i < n; ++i) mi_132(i);
        MultiPoly r = MultiPoly::monomial(1, 0, static_cast<std::uint32_t>(n - 1), 1) * mi_132(n - 1);
        r += substitute(mi_132(n - 2), Substitution::t_shift(1));
        for (int k = 2; k <= n / 2; ++k) {
            r += MultiPoly::monomial(1, 0, static_cast<std::uint32_t>(n + k - 2), 2) *
                 substitute(mfi_132(k - 1), Substitution::t_shift(n - 2 * k + 1, 2)) *
                 substitute(mi_132(n - 2 * k), Substitution::t_shift(k));
        }
        return r;
    });
}

MultiPoly mi_132_maj(int n) {
    need(n >= 0, "mi_132_maj: n must be >= 0");
    return reverse_in_q(substitute(mi_132(n), Substitution::t_one()), static_cast<int>(choose2(n)));
}

MultiPoly mi_321(int n) {
    need(n >= 0, "mi_321: n must be >= 0");
    return memo().get("mi_321", n, 0, [n] { return q_binomial(n, (n + 1) / 2); });
}

MultiPoly mi_123(int n) {
    need(n >= 0, "mi_123: n must be >= 0");
    return reverse_in_q(mi_321(n), static_cast<int>(choose2(n)));
}

MultiPoly mi_321_t_le(int n, int k) {
    need(n >= 0 && k >= 0 && 2 * k <= n, "mi_321_t_le: need 0 <= k <= n/2");
    return q_binomial(n, k);
}

MultiPoly mi_321_t_eq(int n, int k) {
    need(n >= 0 && k >= 0 && 2 * k <= n, "mi_321_t_eq: need 0 <= k <= n/2");
    MultiPoly r = q_binomial(n, k);
    if (k >= 1) r -= q_binomial(n, k - 1);
    return r;
}

MultiPoly mfi_321(int m) {
    need(m >= 0, "mfi_321: m must be >= 0");
    return mi_321_t_eq(2 * m, m);
}

MultiPoly bar_mfi_123(int m) {
    need(m >= 0, "bar_mfi_123: m must be >= 0");
    MultiPoly r;
    for (int k = 0; k <= 2 * (m / 2); ++k) r += q_binomial(2 * m, k).scaled(k % 2 == 0 ? 1 : -1);
    return r;
}

namespace {

OracleSpec cls(Population pop, std::string_view patterns, Weight w, bool half = false) {
    OracleSpec s;
    s.population = pop;
    s.patterns = parse_pattern_list(patterns);
    s.weight = w;
    s.half_index = half;
    return s;
}

FormulaInfo unary(std::string id, std::string anchor, MultiPoly (*fn)(int), OracleSpec spec) {
    FormulaInfo f;
    f.id = std::move(id);
    f.anchor = std::move(anchor);
    f.arity = 1;
    f.eval = [fn](int n, int) { return fn(n); };
    f.oracle = std::move(spec);
    return f;
}

FormulaInfo binary(std::string id, std::string anchor, MultiPoly (*fn)(int, int), OracleSpec spec, int min_arg) {
    FormulaInfo f;
    f.id = std::move(id);
    f.anchor = std::move(anchor);
    f.arity = 2;
    f.eval = fn;
    f.oracle = std::move(spec);
    f.min_arg = min_arg;
    return f;
}

}  // namespace

FormulaRegistry::FormulaRegistry() {
    using P = Population;
    const Weight inv = Weight::single(Stat::Inv), coinv = Weight::single(Stat::Coinv), maj = Weight::single(Stat::Maj),
                 comaj = Weight::single(Stat::Comaj);
    const Weight comaj_asc{Stat::None, Stat::Comaj, Stat::Asc};

    formulas_.push_back(unary("catalan_q", "C_n(q) = sum_{k=0}^{n-1} q^k C_k(q) C_{n-k-1}(q), C_0(q) = 1", catalan_q,
                              cls(P::Perm, "132", coinv)));
    formulas_.push_back(unary("ii_231", "II_n(231) = sum_{j=1}^n q^{binom(j,2)} II_{n-j}(231)", ii_231, cls(P::Inv, "231", inv)));
    formulas_.push_back(unary("bar_ifi_132", "barIFI_{2m}(132) = C_m(q^2)", bar_ifi_132, cls(P::Fpf, "132", coinv, true)));
    formulas_.push_back(unary("bar_ifi_213", "barIFI_{2m}(132) = barIFI_{2m}(213)", bar_ifi_213, cls(P::Fpf, "213", coinv, true)));
    formulas_.push_back(unary("bar_ii_132",
                              "barII_n(132) = q^{n-1} barII_{n-1}(132) + sum_{k=1}^{floor(n/2)} q^{2(k-1)} C_{k-1}(q^2) barII_{n-2k}(132)",
                              bar_ii_132, cls(P::Inv, "132", coinv)));
    formulas_.push_back(unary("ifi_321", "IFI_{2m}(321) = sum_{k=1}^m q^{2k-1} IFI_{2k-2}(321) IFI_{2(m-k)}(321)", ifi_321,
                              cls(P::Fpf, "321", inv, true)));
    formulas_.push_back(unary("ii_321", "II_n(321) = IFI_n(321) + sum_{k=0}^{ceil(n/2)-1} IFI_{2k}(321) II_{n-2k-1}(321)", ii_321,
                              cls(P::Inv, "321", inv)));
    {
        OracleSpec a;
        a.kind = OracleSpec::Kind::CycleInsertionA;
        formulas_.push_back(binary("seq_A", "A_{m,l}(q) = A_{m+1,l-1}(q) + sum_{i=2}^m q^{i-1} A_{i,l-1}(q), A_{m,0}(q) = 1", seq_A, a, 1));
        OracleSpec b;
        b.kind = OracleSpec::Kind::CycleInsertionB;
        formulas_.push_back(binary("seq_B", "B_{m,l}(q) = sum_{i=2}^m q^{i-1} A_{i,l-1}(q), B_{1,l}(q) = 0", seq_B, b, 1));
    }
    formulas_.push_back(unary("bar_ii_123",
                              "barII_{2k+1}(123) = sum_{j=1}^k q^{2j} A_{2j+1,k-j}(q^2) + sum_{j=0}^k B_{2j+2,k-j}(q^2); "
                              "barII_{2k}(123) = sum_{j=1}^k B_{2j+1,k-j}(q^2) + sum_{j=1}^k q^{2j-1} A_{2j,k-j}(q^2)",
                              bar_ii_123, cls(P::Inv, "123", coinv)));
    formulas_.push_back(unary("bar_ifi_123", "barIFI_{2k}(123) = sum_{j=1}^k B_{2j+1,k-j}(q^2)", bar_ifi_123,
                              cls(P::Fpf, "123", coinv, true)));
    formulas_.push_back(unary("mi_231", "MI_n(231) = sum_{D subset [n-1]} q^{sum D} = prod_{k=1}^{n-1} (1+q^k)", mi_231,
                              cls(P::Inv, "231", maj)));
    formulas_.push_back(unary("mfi_132",
                              "F_{2m}(q,t) = F_{2(m-1)}(q,qt) + sum_{k=1}^{m-1} q^{2m+k-1} t^2 F_{2k}(q,q^{(2m-2k-1)/2}t) F_{2(m-k-1)}(q,q^{k+1}t)",
                              mfi_132, cls(P::Fpf, "132", comaj_asc, true)));
    formulas_.push_back(unary("mi_132",
                              "M_n(q,t) = q^{n-1} t M_{n-1}(q,t) + M_{n-2}(q,qt) + sum_{k=2}^{floor(n/2)} q^{n+k-2} t^2 "
                              "F_{2(k-1)}(q,q^{(n-2k+1)/2}t) M_{n-2k}(q,q^k t)",
                              mi_132, cls(P::Inv, "132", comaj_asc)));
    formulas_.push_back(unary("mi_132_maj", "MI_n(132) = q^{binom(n,2)} M_n(q^{-1},1)", mi_132_maj, cls(P::Inv, "132", maj)));
    formulas_.push_back(unary("mi_321", "MI_n(321) = [n, ceil(n/2)]_q", mi_321, cls(P::Inv, "321", maj)));
    formulas_.push_back(unary("mi_123", "MI_n(123) = q^{binom(n,2)} MI_n(321; q^{-1})", mi_123, cls(P::Inv, "123", maj)));
    {
        OracleSpec le = cls(P::Inv, "321", maj);
        le.filter = TwoCycleFilter::Kind::AtMost;
        formulas_.push_back(binary("mi_321_t_le", "sum_{t(iota) <= k} q^{maj(iota)} = [n, k]_q", mi_321_t_le, le, 0));
        OracleSpec eq = cls(P::Inv, "321", maj);
        eq.filter = TwoCycleFilter::Kind::Exactly;
        formulas_.push_back(binary("mi_321_t_eq", "sum_{t(iota) = k} q^{maj(iota)} = [n, k]_q - [n, k-1]_q", mi_321_t_eq, eq, 0));
    }
    formulas_.push_back(unary("mfi_321", "MFI_{2m}(321) = [2m, m]_q - [2m, m-1]_q", mfi_321, cls(P::Fpf, "321", maj, true)));
    formulas_.push_back(unary("bar_mfi_123", "barMFI_{2m}(123) = sum_{k=0}^{2 floor(m/2)} (-1)^k [2m, k]_q", bar_mfi_123,
                              cls(P::Fpf, "123", comaj, true)));

    for (const auto& row : table_rows()) {
        FormulaInfo f;
        f.id = "table:" + row.id;
        f.anchor = row.anchor;
        f.arity = 1;
        const TableRow* r = &row;
        f.eval = [r](int n, int) { return evaluate_row(*r, n); };
        f.oracle.population = Population::Inv;
        f.oracle.patterns = row.patterns;
        f.oracle.weight = Weight::joint();
        formulas_.push_back(std::move(f));
    }
}

const FormulaRegistry& FormulaRegistry::instance() {
    static const FormulaRegistry reg;
    return reg;
}

const FormulaInfo* FormulaRegistry::find(std::string_view id) const {
    for (const auto& f : formulas_)
        if (f.id == id) return &f;
    if (id.substr(0, 6) != "table:")
        if (const TableRow* row = find_table_row(id)) return find("table:" + row->id);
    return nullptr;
}

MultiPoly FormulaRegistry::eval(std::string_view id, int n, int k) const {
    const FormulaInfo* f = find(id);
    if (!f) throw std::invalid_argument("unknown formula '" + std::string(id) + "'");
    return f->eval(n, k);
}

std::vector<int> second_args(const FormulaInfo& f, int n) {
    std::vector<int> out;
    if (f.arity != 2) return out;
    if (f.oracle.kind == OracleSpec::Kind::Class) {
        for (int k = 0; 2 * k <= n; ++k) out.push_back(k);
    } else {
        for (int l = 0; l <= 5; ++l) out.push_back(l);
    }
    return out;
}

MultiPoly oracle_value(const FormulaInfo& f, int n, int k, SnapshotCache& cache) {
    const OracleSpec& s = f.oracle;
    if (s.kind != OracleSpec::Kind::Class) {
        MultiPoly r;
        for (const auto& seq : enumerate_AB(n, k, s.kind == OracleSpec::Kind::CycleInsertionA ? ABVariant::A : ABVariant::B)) {
            long long e = 0;
            for (int a : seq) e += a - 1;
            r.add_term({0, static_cast<std::uint32_t>(e), 0}, 1);
        }
        return r;
    }
    AvoidanceClass c{s.population, s.half_index ? 2 * n : n, s.patterns};
    TwoCycleFilter filter{s.filter, k};
    return cache.get(c)->genfun(s.weight, filter);
}

}  // namespace permstat
