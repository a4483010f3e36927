// One line per acceptance criterion, with wall time against its budget. Exit 1 if any line fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "permstat/bijection_checks.hpp"
#include "permstat/conjectures.hpp"
#include "permstat/formulas.hpp"
#include "permstat/oracle.hpp"
#include "permstat/poly.hpp"
#include "permstat/verify.hpp"

using namespace permstat;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

std::uint64_t binomial(int n, int k) {
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

MultiPoly mi(int n, const char* pat, Stat s = Stat::Maj) {
    return genfun(AvoidanceClass{Population::Inv, n, parse_pattern_list(pat)}, Weight::single(s));
}

// every check in the report, restricted to one group
void require_group(Outcome& o, const VerifyReport& r, const std::string& group, std::size_t at_least) {
    std::size_t seen = 0;
    for (const auto& c : r.checks) {
        if (c.group != group) continue;
        ++seen;
        if (!c.pass) o.fail(c.name + ": " + c.detail);
    }
    if (seen < at_least) o.fail(group + ": only " + std::to_string(seen) + " checks ran");
    if (o.pass) o.detail = std::to_string(seen) + " checks";
}

VerifyReport verify_group(const std::string& scope) {
    VerifyOptions v;
    v.scope = scope;
    v.n_inv = 12;
    v.n_perm = 8;
    v.m_fpf = 6;
    v.n_parity = 13;
    return run_verify(v);
}

Outcome cardinalities() {
    Outcome o;
    for (const char* pat : {"123", "132", "213", "321", "231", "312"}) {
        const bool central = std::string(pat) != "231" && std::string(pat) != "312";
        for (int n = 0; n <= 12; ++n) {
            const std::uint64_t got = AvoidanceClass{Population::Inv, n, parse_pattern_list(pat)}.size();
            const std::uint64_t want = central ? binomial(n, (n + 1) / 2) : (n == 0 ? 1 : std::uint64_t{1} << (n - 1));
            if (got != want) o.fail(std::string(pat) + " n=" + std::to_string(n) + ": " + std::to_string(got));
        }
    }
    if (o.pass) o.detail = "6 patterns, n=0..12";
    return o;
}

Outcome q_binomial_identity() {
    Outcome o;
    for (int n = 0; n <= 12; ++n)
        if (mi(n, "321") != q_binomial(n, (n + 1) / 2)) o.fail("n=" + std::to_string(n));
    if (mi(4, "321") != MultiPoly::parse("1 + q + 2*q^2 + q^3 + q^4")) o.fail("MI_4(321) = " + mi(4, "321").str());
    if (o.pass) o.detail = "n=0..12, MI_4(321) = " + mi(4, "321").str();
    return o;
}

Outcome symmetries() {
    Outcome o;
    require_group(o, verify_group("symmetries"), "symmetries", 4);
    return o;
}

Outcome formulas() {
    Outcome o;
    const std::set<std::string> named{"ii_231",  "bar_ii_132", "bar_ifi_132", "ifi_321", "ii_321",      "bar_ii_123",
                                      "bar_ifi_123", "mi_231", "mfi_132",     "mi_132",  "mi_321",      "mi_321_t_le",
                                      "mi_321_t_eq", "mfi_321", "bar_mfi_123"};
    std::set<std::string> have;
    std::size_t rows = 0;
    for (const auto& f : FormulaRegistry::instance().list()) {
        have.insert(f.id);
        rows += f.id.rfind("table:", 0) == 0;
    }
    for (const auto& id : named)
        if (!have.count(id)) o.fail("not registered: " + id);
    if (rows < 17) o.fail("only " + std::to_string(rows) + " table rows");
    if (!o.pass) return o;
    require_group(o, verify_group("formulas"), "formulas", have.size());
    return o;
}

Outcome bijections() {
    Outcome o;
    const std::pair<const char*, int> sweeps[] = {{"phi321", 12},     {"transpose-inv", 10}, {"transpose-perm", 8},
                                                  {"desc213", 11},    {"theta", 8},          {"beissinger", 10}};
    std::uint64_t checked = 0;
    for (const auto& [name, hi] : sweeps)
        for (int n = 0; n <= hi; ++n) {
            const BijectionCheck c = verify_bijection(name, n);
            checked += c.checked;
            if (!c.ok()) o.fail(std::string(name) + " n=" + std::to_string(n) + ": " + c.first_failure);
        }
    if (o.pass) o.detail = std::to_string(checked) + " members";
    return o;
}

Outcome internal_zeros() {
    Outcome o;
    require_group(o, verify_group("zeros"), "zeros", 2);
    return o;
}

Outcome parity() {
    Outcome o;
    require_group(o, verify_group("parity"), "parity", 2);
    return o;
}

Outcome conjectures() {
    Outcome o;
    struct Run {
        const char* id;
        ConjectureGrid g;
    };
    const Run runs[] = {{"ii-wilf", {4, 10}},           {"ii-wilf-separation", {4, 8}}, {"mi-wilf", {4, 9}},
                        {"conj", {4, 8, 8}},            {"conj-invo", {4, 8, 8}}};
    std::size_t cells = 0;
    for (const auto& r : runs) {
        const ConjectureReport rep = run_conjecture(r.id, r.g);
        cells += rep.cells.size();
        if (!rep.holds()) o.fail(std::string(r.id) + " does not hold");
    }
    if (o.pass) o.detail = std::to_string(cells) + " cells";
    return o;
}

Outcome errata() {
    Outcome o;
    const VerifyReport r = verify_group("errata");
    if (!r.ok()) o.fail("errata checks failed");
    std::set<std::string> ids;
    for (const auto& w : r.warnings) ids.insert(w.id);
    for (const char* id : {"mi_231", "table:123,231"})
        if (!ids.count(id)) o.fail(std::string("missing warning ") + id);
    if (o.pass) o.detail = std::to_string(r.warnings.size()) + " warnings";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget;  // seconds
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> all{
        {1, "cardinalities", 10, cardinalities},      {2, "q-binomial identity", 30, q_binomial_identity},
        {3, "symmetries", 60, symmetries},            {4, "formulas vs oracle", 180, formulas},
        {5, "bijections", 180, bijections},           {6, "internal zeros", 60, internal_zeros},
        {7, "parity", 60, parity},                    {8, "conjecture sweeps", 300, conjectures},
        {9, "errata surfaced", 60, errata},
    };
    bool ok = true;
    for (const auto& c : all) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (s > c.budget) o.fail("over budget");
        ok = ok && o.pass;
        std::printf("%s %d %-22s %7.2fs / %.0fs  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, s, c.budget, o.detail.c_str());
        std::fflush(stdout);
    }
    return ok ? 0 : 1;
}
