#include "permstat/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "permstat/bijection_checks.hpp"
#include "permstat/formulas.hpp"
#include "permstat/tables.hpp"

namespace permstat {

namespace {

int binom2(int n) { return n * (n - 1) / 2; }

std::string range_text(int lo, int hi, const char* var = "n") { return std::string(var) + "=" + std::to_string(lo) + ".." + std::to_string(hi); }

struct Ctx {
    const VerifyOptions& opt;
    SnapshotCache cache;
    VerifyReport rep;

    explicit Ctx(const VerifyOptions& o) : opt(o), cache(o.caps, o.par) {}

    MultiPoly oracle(Population pop, int n, const char* patterns, const Weight& w, TwoCycleFilter f = {}) {
        return cache.get(AvoidanceClass{pop, n, parse_pattern_list(patterns)})->genfun(w, f);
    }
    void add(std::string group, std::string name, std::string anchor, bool pass, std::string detail) {
        rep.checks.push_back({std::move(group), std::move(name), std::move(anchor), pass, std::move(detail)});
    }
};

// Upper end of the first argument for a formula at the configured sizes.
int formula_limit(const FormulaInfo& f, const VerifyOptions& opt) {
    if (f.oracle.kind != OracleSpec::Kind::Class) return opt.m_fpf;
    if (f.oracle.half_index) return opt.m_fpf;
    return f.oracle.population == Population::Perm ? opt.n_perm : opt.n_inv;
}

void check_formula(Ctx& c, const FormulaInfo& f) {
    const int hi = formula_limit(f, c.opt);
    const char* var = f.oracle.half_index || f.oracle.kind != OracleSpec::Kind::Class ? "m" : "n";
    int values = 0;
    for (int n = f.min_arg; n <= hi; ++n) {
        std::vector<int> ks = f.arity == 2 ? second_args(f, n) : std::vector<int>{0};
        for (int k : ks) {
            const MultiPoly want = oracle_value(f, n, k, c.cache);
            const MultiPoly got = f.eval(n, k);
            ++values;
            if (got != want) {
                std::string at = std::string(var) + "=" + std::to_string(n) + (f.arity == 2 ? ", k=" + std::to_string(k) : "");
                c.add("formulas", f.id, f.anchor, false, at + ": formula " + got.str() + " vs oracle " + want.str());
                return;
            }
        }
    }
    c.add("formulas", f.id, f.anchor, true, range_text(f.min_arg, hi, var) + ", " + std::to_string(values) + " values");
}

void check_formulas(Ctx& c, const std::string& only) {
    for (const auto& f : FormulaRegistry::instance().list())
        if (only.empty() || f.id == only) check_formula(c, f);
}

void check_cardinalities(Ctx& c) {
    const std::pair<const char*, bool> cases[] = {{"123", true}, {"132", true}, {"213", true},
                                                  {"321", true}, {"231", false}, {"312", false}};
    for (const auto& [pat, central] : cases) {
        std::string bad;
        for (int n = 0; n <= c.opt.n_inv && bad.empty(); ++n) {
            const auto got = c.cache.get(AvoidanceClass{Population::Inv, n, parse_pattern_list(pat)})->stats.size();
            const std::uint64_t want = central ? static_cast<std::uint64_t>(q_binomial(n, (n + 1) / 2).evaluate_at_one())
                                               : (n == 0 ? 1 : std::uint64_t{1} << (n - 1));
            if (got != want) bad = "n=" + std::to_string(n) + ": " + std::to_string(got) + " vs " + std::to_string(want);
        }
        c.add("cardinalities", std::string("|I_n(") + pat + ")|",
              central ? "|I_n(pi)| = binom(n, ceil(n/2))" : "|I_n(pi)| = 2^{n-1}", bad.empty(),
              bad.empty() ? range_text(0, c.opt.n_inv) : bad);
    }
}

void check_symmetries(Ctx& c) {
    struct Case {
        Population pop;
        const char *left, *right;
        int hi;
        const char* anchor;
    };
    const Case cases[] = {
        {Population::Inv, "123", "321", c.opt.n_inv, "MI_n(123) = q^{binom(n,2)} MI_n(321; q^{-1})"},
        {Population::Inv, "213", "132", c.opt.n_inv, "MI_n(213) = q^{binom(n,2)} MI_n(132; q^{-1})"},
        {Population::Perm, "123", "321", c.opt.n_perm, "M_n(123) = q^{binom(n,2)} M_n(321; q^{-1})"},
        {Population::Perm, "213", "132", c.opt.n_perm, "M_n(213) = q^{binom(n,2)} M_n(132; q^{-1})"},
    };
    const Weight maj = Weight::single(Stat::Maj);
    for (const auto& cs : cases) {
        std::string bad;
        for (int n = 0; n <= cs.hi && bad.empty(); ++n) {
            const MultiPoly l = c.oracle(cs.pop, n, cs.left, maj);
            const MultiPoly r = reverse_in_q(c.oracle(cs.pop, n, cs.right, maj), binom2(n));
            if (l != r) bad = "n=" + std::to_string(n) + ": " + l.str() + " vs " + r.str();
        }
        const std::string name = std::string(cs.pop == Population::Perm ? "M" : "MI") + "(" + cs.left + ") ~ " + cs.right;
        c.add("symmetries", name, cs.anchor, bad.empty(), bad.empty() ? range_text(0, cs.hi) : bad);
    }
}

std::int64_t coeff_q(const MultiPoly& p, int e) { return p.coefficient({0, static_cast<std::uint32_t>(e), 0}); }

void check_zeros(Ctx& c) {
    const Weight maj = Weight::single(Stat::Maj);
    for (const bool mirrored : {false, true}) {
        std::string bad;
        const int lo = 3, hi = c.opt.n_inv;
        for (int n = lo; n <= hi && bad.empty(); ++n) {
            const MultiPoly p = c.oracle(Population::Inv, n, mirrored ? "213" : "132", maj);
            const int top = binom2(n), gap = (n + 1) / 2;
            for (int e = 0; e <= top && bad.empty(); ++e) {
                // distance from the end carrying the isolated coefficient 1
                const int d = mirrored ? e : top - e;
                const std::int64_t v = coeff_q(p, e);
                const bool ok = d == 0 ? v == 1 : (d < gap ? v == 0 : v > 0);
                if (!ok) bad = "n=" + std::to_string(n) + ": coefficient of q^" + std::to_string(e) + " is " + std::to_string(v);
            }
            if (bad.empty() && p.degree_q() > top) bad = "n=" + std::to_string(n) + ": degree above binom(n,2)";
        }
        c.add("zeros", mirrored ? "MI_n(213) internal zeros" : "MI_n(132) internal zeros",
              mirrored ? "coefficients of q^1..q^{ceil(n/2)-1} in MI_n(213) vanish, the rest are positive"
                       : "coefficients of q^{binom(n,2)-ceil(n/2)+1}..q^{binom(n,2)-1} in MI_n(132) vanish, the rest are positive",
              bad.empty(), bad.empty() ? range_text(lo, hi) : bad);
    }
}

void check_parity(Ctx& c) {
    const Weight coinv = Weight::single(Stat::Coinv);
    std::string bad_odd, bad_even;
    for (int n = 0; n <= c.opt.n_parity; ++n) {
        const MultiPoly p = c.oracle(Population::Inv, n, "123", coinv);
        bool has_odd = false;
        for (const auto& [m, v] : p.terms()) has_odd = has_odd || (m.q % 2 == 1 && v != 0);
        if (n % 2 == 1) {
            if (has_odd && bad_odd.empty()) bad_odd = "n=" + std::to_string(n) + ": odd exponent in " + p.str();
        } else if (n >= 2) {
            // exactly two fixed points means (n-2)/2 two-cycles
            const MultiPoly two_fixed = c.oracle(Population::Inv, n, "123", coinv, {TwoCycleFilter::Kind::Exactly, (n - 2) / 2});
            if (has_odd != !two_fixed.is_zero() && bad_even.empty())
                bad_even = "n=" + std::to_string(n) + ": odd exponents " + (has_odd ? "present" : "absent") +
                           " but the two-fixed-point subclass is " + (two_fixed.is_zero() ? "empty" : "non-empty");
        } else if (has_odd && bad_even.empty()) {
            bad_even = "n=0: odd exponent";
        }
    }
    const int odd_hi = c.opt.n_parity % 2 ? c.opt.n_parity : c.opt.n_parity - 1;
    c.add("parity", "barII_n(123) odd n", "only even powers of q in barII_n(123) for odd n", bad_odd.empty(),
          bad_odd.empty() ? "odd n up to " + std::to_string(odd_hi) : bad_odd);
    c.add("parity", "barII_n(123) even n", "odd powers in barII_n(123) for even n exactly when some member has two fixed points",
          bad_even.empty(), bad_even.empty() ? "even n up to " + std::to_string(c.opt.n_parity - (c.opt.n_parity % 2)) : bad_even);
}

void check_bijections(Ctx& c) {
    for (const auto& name : bijection_names()) {
        const bool perm = name == "transpose-perm" || name == "theta" || name == "star-split";
        const int hi = name == "core" ? c.opt.n_inv + 2 : (perm ? c.opt.n_perm : c.opt.n_inv);
        std::uint64_t checked = 0;
        std::string bad;
        for (int n = 0; n <= hi && bad.empty(); ++n) {
            const auto r = verify_bijection(name, n, c.opt.par);
            checked += r.checked;
            if (!r.ok()) bad = "n=" + std::to_string(n) + ": " + std::to_string(r.failures) + " failures, first " + r.first_failure;
        }
        c.add("bijections", name, "round trip and statistic transport", bad.empty(),
              bad.empty() ? range_text(0, hi) + ", " + std::to_string(checked) + " checks" : bad);
    }
}

void check_errata(Ctx& c) {
    const Weight maj = Weight::single(Stat::Maj);
    // the printed statements are only told apart from n = 6 or so, whatever the length caps
    const int top = std::max(c.opt.n_inv, 8);
    // mi_231 with the product from k = 0
    for (int n = 1; n <= top; ++n) {
        const MultiPoly want = c.oracle(Population::Inv, n, "231", maj);
        const MultiPoly printed = mi_231_as_printed(n);
        if (printed != want) {
            c.rep.warnings.push_back({"mi_231", "the product for MI_n(231) printed with lower index k=0 gives " + printed.str() +
                                                    " at n=" + std::to_string(n) + ", the oracle gives " + want.str() +
                                                    "; the index starts at k=1"});
            break;
        }
    }
    c.add("errata", "mi_231 lower index", "MI_n(231) = prod_{k=1}^{n-1} (1+q^k)", mi_231(top) == c.oracle(Population::Inv, top, "231", maj),
          "k=1 form matches the oracle at n=" + std::to_string(top));

    const int hi = std::min(top, 10);
    const Weight joint = Weight::joint();
    for (const auto& row : table_rows()) {
        if (!row.printed_patterns.empty()) {
            // which pattern sets of this size does the printed formula really count?
            std::vector<std::vector<Permutation>> sets;
            const auto singles = enumerate(Population::Perm, 3);
            const std::size_t size = row.patterns.size();
            std::vector<int> pick(size);
            for (std::size_t i = 0; i < size; ++i) pick[i] = static_cast<int>(i);
            for (;;) {
                std::vector<Permutation> s;
                for (int i : pick) s.push_back(singles[static_cast<std::size_t>(i)]);
                sets.push_back(s);
                std::size_t i = size;
                while (i-- > 0 && pick[i] == static_cast<int>(singles.size() - size + i)) {}
                if (i == static_cast<std::size_t>(-1)) break;
                ++pick[i];
                for (std::size_t j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
            }
            std::vector<char> match(sets.size(), 1);
            for (int n = 0; n <= hi; ++n) {
                const auto polys = genfun_many(Population::Inv, n, sets, joint, c.opt.caps, c.opt.par);
                const MultiPoly f = evaluate_row(row, n);
                for (std::size_t i = 0; i < sets.size(); ++i) match[i] = match[i] && polys[i] == f;
            }
            std::string matched;
            bool label_matches = false;
            for (std::size_t i = 0; i < sets.size(); ++i)
                if (match[i]) {
                    matched += (matched.empty() ? "{" : ", {") + format_pattern_list(sets[i]) + "}";
                    label_matches = label_matches || format_pattern_list(sets[i]) == format_pattern_list(row.printed_patterns);
                }
            const std::string label = "{" + format_pattern_list(row.printed_patterns) + "}";
            c.rep.warnings.push_back({"table:" + row.id, "a second table row is labelled " + label + "; by the oracle (n<=" +
                                                             std::to_string(hi) + ") its formula counts " +
                                                             (matched.empty() ? std::string("no pattern set") : matched) +
                                                             ", so it is registered as {" + row.id + "}"});
            c.add("errata", "duplicated label " + label, row.anchor, !label_matches && !matched.empty(),
                  "formula matches " + (matched.empty() ? std::string("nothing") : matched));
        }
        if (!row.as_printed.empty()) {
            int first_bad = -1;
            for (int n = 0; n <= hi && first_bad < 0; ++n)
                if (evaluate_row(row, n, true) != c.oracle(Population::Inv, n, row.id.c_str(), joint)) first_bad = n;
            if (first_bad >= 0) {
                c.rep.warnings.push_back({"table:" + row.id, "the printed formula for {" + row.id + "} disagrees with the oracle from n=" +
                                                                 std::to_string(first_bad) + (row.note.empty() ? "" : " (" + row.note + ")") +
                                                                 "; the corrected form is registered"});
            }
            c.add("errata", "printed form of {" + row.id + "}", row.anchor, true,
                  first_bad >= 0 ? "printed form differs from n=" + std::to_string(first_bad) : "printed form agrees for n<=" + std::to_string(hi));
        }
    }
}

}  // namespace

const std::vector<std::string>& verify_scopes() {
    static const std::vector<std::string> s{"all", "formulas", "cardinalities", "symmetries", "zeros", "parity", "bijections", "errata"};
    return s;
}

bool VerifyReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.pass; });
}

std::string VerifyReport::human() const {
    std::string s;
    std::size_t failed = 0;
    for (const auto& c : checks) {
        failed += !c.pass;
        s += std::string(c.pass ? "[pass] " : "[FAIL] ") + c.group + "  " + c.name + "  " + c.detail + "\n";
        if (!c.anchor.empty()) s += "         " + c.anchor + "\n";
    }
    for (const auto& w : warnings) s += "warning " + w.id + ": " + w.message + "\n";
    s += std::to_string(checks.size()) + " checks, " + std::to_string(failed) + " failed, " + std::to_string(warnings.size()) +
         " warnings\n";
    return s;
}

VerifyReport run_verify(const VerifyOptions& opt) {
    Ctx c(opt);
    const std::string& s = opt.scope;
    const bool all = s == "all";
    bool known = all;
    auto want = [&](const char* g) {
        if (all || s == g) {
            known = true;
            return true;
        }
        return false;
    };
    if (want("cardinalities")) check_cardinalities(c);
    if (want("formulas")) check_formulas(c, "");
    if (want("symmetries")) check_symmetries(c);
    if (want("zeros")) check_zeros(c);
    if (want("parity")) check_parity(c);
    if (want("bijections")) check_bijections(c);
    if (want("errata")) check_errata(c);
    if (!known) {
        const FormulaInfo* f = FormulaRegistry::instance().find(s);
        if (!f) throw std::invalid_argument("unknown verify scope '" + s + "'");
        check_formula(c, *f);
    }
    return std::move(c.rep);
}

}  // namespace permstat
