#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>

#include "permstat/bijection_checks.hpp"
#include "permstat/conjectures.hpp"
#include "permstat/formulas.hpp"
#include "permstat/oracle.hpp"
#include "permstat/serialize.hpp"
#include "permstat/verify.hpp"

using namespace permstat;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Range {
    int lo = 0, hi = 0;
};

// "7" or "2..9"
Range parse_range(const std::string& s) {
    try {
        const auto dots = s.find("..");
        if (dots == std::string::npos) {
            const int v = std::stoi(s);
            return {v, v};
        }
        Range r{std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
        if (r.lo > r.hi) throw UsageError("empty range " + s);
        return r;
    } catch (const std::logic_error&) {
        throw UsageError("bad --n value '" + s + "', expected a or a..b");
    }
}

struct Common {
    std::string format = "human";
    std::string out;
    int jobs = 0;
    int cap_perm = 10, cap_inv = 14;
    std::uint64_t seed = 1;
    bool timing = false;

    Caps caps() const { return {cap_perm, cap_inv}; }
    ParallelOptions par() const { return {jobs}; }
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw UsageError("cannot open " + path + " for writing");
        }
    }
    std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

Population population_arg(const std::string& s) {
    auto p = parse_population(s);
    if (!p) throw UsageError("unknown population '" + s + "' (perm, inv, fpf)");
    return *p;
}

Weight weight_arg(const std::string& s) {
    auto w = Weight::parse(s);
    if (!w) throw UsageError("unknown weight '" + s + "'");
    return *w;
}

std::vector<Permutation> patterns_arg(const std::string& s) {
    try {
        return parse_pattern_list(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// A registered formula computing exactly this class genfun, if any.
const FormulaInfo* matching_formula(Population pop, const std::vector<Permutation>& pats, const Weight& w) {
    const std::string id = format_pattern_list(pats);
    for (const auto& f : FormulaRegistry::instance().list()) {
        const auto& o = f.oracle;
        if (o.kind != OracleSpec::Kind::Class || o.filter != TwoCycleFilter::Kind::None || f.arity != 1) continue;
        if (o.population == pop && format_pattern_list(o.patterns) == id && o.weight == w) return &f;
    }
    return nullptr;
}

int cmd_genfun(const Common& c, const std::string& pop_s, const std::string& pats_s, const std::string& weight_s,
               const std::string& n_s, bool no_formula) {
    const Population pop = population_arg(pop_s);
    const auto pats = patterns_arg(pats_s);
    const Weight w = weight_arg(weight_s);
    const Range r = parse_range(n_s);
    const FormulaInfo* f = no_formula ? nullptr : matching_formula(pop, pats, w);
    Output out(c.out);
    auto& os = out.os();
    if (c.format == "csv") os << "n,oracle,formula,status\n";
    if (c.format == "human") {
        os << "# " << population_name(pop) << " avoiding {" << format_pattern_list(pats) << "}, weight " << w.name();
        if (f) os << ", formula " << f->id;
        os << "\n";
    }
    bool all_match = true;
    for (int n = r.lo; n <= r.hi; ++n) {
        if (pop == Population::Fpf && n % 2 == 1) continue;
        const MultiPoly g = genfun(AvoidanceClass{pop, n, pats}, w, c.caps(), c.par());
        std::optional<MultiPoly> fv;
        if (f) {
            const int arg = f->oracle.half_index ? n / 2 : n;
            if (arg >= f->min_arg) fv = f->eval(arg, 0);
        }
        const std::string status = fv ? (*fv == g ? "MATCH" : "DIFF") : "";
        all_match = all_match && status != "DIFF";
        if (c.format == "json") {
            nlohmann::json row{{"n", n}, {"oracle", g.str()}, {"oracle_terms", to_json(g)}};
            if (fv) {
                row["formula"] = fv->str();
                row["status"] = status;
            }
            os << row.dump() << "\n";
        } else if (c.format == "csv") {
            os << n << "," << csv_quote(g.str()) << "," << (fv ? csv_quote(fv->str()) : "") << "," << status << "\n";
        } else {
            os << "n=" << n << "  " << g.str();
            if (fv) os << " | " << status;
            os << "\n";
        }
    }
    return all_match ? 0 : 1;
}

int cmd_enumerate(const Common& c, const std::string& pop_s, const std::string& pats_s, const std::string& n_s, int sample) {
    const Population pop = population_arg(pop_s);
    const auto pats = patterns_arg(pats_s);
    const Range r = parse_range(n_s);
    Output out(c.out);
    auto& os = out.os();
    if (c.format == "csv") os << "n,perm,inv,coinv,maj,comaj,des,asc\n";
    auto emit = [&](int n, const Permutation& s) {
        const StatBundle b = stats(s);
        if (c.format == "json") {
            os << nlohmann::json{{"n", n},        {"perm", s.str()}, {"inv", b.inv}, {"coinv", b.coinv},
                                 {"maj", b.maj},  {"comaj", b.comaj}, {"des", b.des}, {"asc", b.asc}}
                      .dump()
               << "\n";
        } else if (c.format == "csv") {
            os << n << "," << csv_quote(s.str()) << "," << b.inv << "," << b.coinv << "," << b.maj << "," << b.comaj << "," << b.des
               << "," << b.asc << "\n";
        } else {
            os << (s.empty() ? "e" : s.str()) << "  inv=" << b.inv << " maj=" << b.maj << " des=" << b.des << "\n";
        }
    };
    for (int n = r.lo; n <= r.hi; ++n) {
        if (sample <= 0) {
            AvoidanceClass{pop, n, pats}.for_each([&](const Permutation& s) { emit(n, s); }, c.caps());
            continue;
        }
        // reservoir sample, reproducible from the seed
        std::mt19937_64 rng(c.seed + static_cast<std::uint64_t>(n));
        std::vector<Permutation> keep;
        std::uint64_t seen = 0;
        AvoidanceClass{pop, n, pats}.for_each([&](const Permutation& s) {
            ++seen;
            if (keep.size() < static_cast<std::size_t>(sample)) {
                keep.push_back(s);
            } else {
                const std::uint64_t j = std::uniform_int_distribution<std::uint64_t>(0, seen - 1)(rng);
                if (j < static_cast<std::uint64_t>(sample)) keep[j] = s;
            }
        }, c.caps());
        std::sort(keep.begin(), keep.end());
        for (const auto& s : keep) emit(n, s);
    }
    return 0;
}

int cmd_verify(const Common& c, const std::string& scope, int n_inv, int n_perm, int m_fpf, int n_parity) {
    VerifyOptions o;
    o.scope = scope;
    o.n_inv = n_inv;
    o.n_perm = n_perm;
    o.m_fpf = m_fpf;
    o.n_parity = n_parity;
    o.caps = c.caps();
    o.par = c.par();
    const VerifyReport rep = run_verify(o);
    Output out(c.out);
    if (c.format == "json") {
        out.os() << to_json(rep).dump(2) << "\n";
    } else if (c.format == "csv") {
        out.os() << "kind,group,name,pass,detail\n";
        for (const auto& k : rep.checks)
            out.os() << "check," << csv_quote(k.group) << "," << csv_quote(k.name) << "," << (k.pass ? "1" : "0") << ","
                     << csv_quote(k.detail) << "\n";
        for (const auto& w : rep.warnings) out.os() << "warning,errata," << csv_quote(w.id) << ",," << csv_quote(w.message) << "\n";
    } else {
        out.os() << rep.human();
    }
    return rep.ok() ? 0 : 1;
}

int cmd_bijection_run(const std::string& name, const std::string& input, int ambient) {
    try {
        std::cout << run_bijection(name, input, ambient);
        if (name != "syt" && name != "rsk") std::cout << "\n";
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(e.what()) + " (input '" + input + "')");
    }
    return 0;
}

int cmd_bijection_verify(const Common& c, const std::string& name, const std::string& n_s) {
    const Range r = parse_range(n_s);
    Output out(c.out);
    bool ok = true;
    for (int n = r.lo; n <= r.hi; ++n) {
        const BijectionCheck chk = verify_bijection(name, n, c.par());
        ok = ok && chk.ok();
        if (c.format == "json") out.os() << to_json(chk).dump() << "\n";
        else
            out.os() << name << " n=" << n << "  " << (chk.ok() ? "ok" : "FAIL") << "  " << chk.checked << " checks"
                     << (chk.ok() ? "" : ", first failure " + chk.first_failure) << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_conjecture(const Common& c, const std::string& id, const ConjectureGrid& g) {
    const auto t0 = std::chrono::steady_clock::now();
    ConjectureReport rep = run_conjecture(id, g, {c.caps(), c.par()});
    if (c.timing) rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Output out(c.out);
    if (c.format == "json") {
        out.os() << to_json(rep).dump(2) << "\n";
    } else if (c.format == "csv") {
        out.os() << "label,holds,proven,witness_n,left,right,left_poly,right_poly\n";
        for (const auto& cell : rep.cells) {
            out.os() << csv_quote(cell.label) << "," << cell.holds << "," << cell.proven;
            if (cell.witness)
                out.os() << "," << cell.witness->n << "," << cell.witness->left << "," << cell.witness->right << ","
                         << csv_quote(cell.witness->left_poly.str()) << "," << csv_quote(cell.witness->right_poly.str());
            else
                out.os() << ",,,,,";
            out.os() << "\n";
        }
    } else {
        out.os() << rep.human();
    }
    return rep.proven_cells_hold() ? 0 : 1;
}

int cmd_formulas_list(const Common& c) {
    Output out(c.out);
    for (const auto& f : FormulaRegistry::instance().list()) {
        if (c.format == "json") {
            out.os() << nlohmann::json{{"id", f.id}, {"arity", f.arity}, {"anchor", f.anchor}}.dump() << "\n";
        } else {
            out.os() << f.id << (f.arity == 2 ? " (n, k)" : "") << "\n    " << f.anchor << "\n";
        }
    }
    return 0;
}

int cmd_formulas_eval(const Common& c, const std::string& id, const std::string& n_s, int k) {
    const FormulaInfo* f = FormulaRegistry::instance().find(id);
    if (!f) throw UsageError("unknown formula '" + id + "'");
    const Range r = parse_range(n_s);
    Output out(c.out);
    for (int n = r.lo; n <= r.hi; ++n) {
        const MultiPoly v = f->eval(n, k);
        if (c.format == "json") out.os() << nlohmann::json{{"n", n}, {"k", k}, {"value", v.str()}, {"terms", to_json(v)}}.dump() << "\n";
        else if (c.format == "csv") out.os() << n << "," << k << "," << csv_quote(v.str()) << "\n";
        else out.os() << f->id << "(" << n << (f->arity == 2 ? "," + std::to_string(k) : "") << ") = " << v.str() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pattern-avoiding involution statistics: enumerate, evaluate, verify, sweep."};
    app.require_subcommand(1);
    Common c;
    app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"human", "json", "csv"}));
    app.add_option("--out", c.out, "Write output to this file");
    app.add_option("--jobs", c.jobs, "Worker threads (0: all cores)");
    app.add_option("--seed", c.seed, "Seed for sampling");
    app.add_option("--cap-perm", c.cap_perm, "Largest permutation length to enumerate");
    app.add_option("--cap-inv", c.cap_inv, "Largest involution length to enumerate");
    app.add_flag("--timing", c.timing, "Report wall time (output is then not byte-stable)");

    std::string pop = "inv", pats, weight = "maj", n_s = "0..8";
    bool no_formula = false;
    auto* gen = app.add_subcommand("genfun", "Oracle generating function per n, with the registered formula when one exists");
    gen->add_option("--population", pop)->check(CLI::IsMember({"perm", "inv", "fpf"}));
    gen->add_option("--patterns", pats, "Comma separated patterns, e.g. 132,213");
    gen->add_option("--weight", weight, "inv, coinv, maj, comaj, joint, bar-joint, count or p:..,q:..,t:..");
    gen->add_option("--n", n_s, "n or a..b");
    gen->add_flag("--no-formula", no_formula, "Skip the formula column");

    int sample = 0;
    auto* en = app.add_subcommand("enumerate", "List members of an avoidance class with their statistics");
    en->add_option("--population", pop)->check(CLI::IsMember({"perm", "inv", "fpf"}));
    en->add_option("--patterns", pats);
    en->add_option("--n", n_s);
    en->add_option("--sample", sample, "Keep a seeded random sample of this size per n");

    std::string scope = "all";
    int n_inv = 12, n_perm = 8, m_fpf = 6, n_parity = 13;
    auto* ver = app.add_subcommand("verify", "Check every formula, symmetry and bijection against the oracle");
    ver->add_option("scope", scope, "all, formulas, cardinalities, symmetries, zeros, parity, bijections, errata, or a formula id");
    ver->add_option("--n-inv", n_inv, "Largest involution length");
    ver->add_option("--n-perm", n_perm, "Largest permutation length");
    ver->add_option("--m-fpf", m_fpf, "Largest fixed-point-free half length");
    ver->add_option("--n-parity", n_parity, "Largest length for the parity check");
    ver->add_option("--n", n_inv, "Shorthand for --n-inv");

    auto* bij = app.add_subcommand("bijection", "Run or exhaustively check a bijection");
    bij->require_subcommand(1);
    std::string bname, binput;
    int ambient = -1;
    auto* brun = bij->add_subcommand("run", "Apply a map to one input");
    brun->add_option("name", bname)->required()->check(CLI::IsMember(runnable_bijections()));
    brun->add_option("input", binput)->required();
    brun->add_option("--n", ambient, "Ambient size for subset inputs");
    auto* bver = bij->add_subcommand("verify", "Round trips and statistic transport over a whole domain");
    bver->add_option("name", bname)->required()->check(CLI::IsMember(bijection_names()));
    bver->add_option("--n", n_s, "n or a..b");
    auto* blist = bij->add_subcommand("list", "Names of maps and checks");

    auto* conj = app.add_subcommand("conjecture", "Conjecture sweeps");
    conj->require_subcommand(1);
    std::string cid;
    ConjectureGrid grid;
    auto* crun = conj->add_subcommand("run", "Sweep one conjecture");
    crun->add_option("id", cid)->required()->check(CLI::IsMember(conjecture_ids()));
    crun->add_option("--max-len", grid.max_len, "Largest pattern length");
    crun->add_option("--n", grid.n_max, "Largest n");
    crun->add_option("--m-max", grid.m_max, "Largest m");
    crun->add_option("--k-max", grid.k_max, "Largest k (dokos)");
    crun->add_option("--k", grid.k, "Single symmetry pair k with m = --m-max");
    auto* clist = conj->add_subcommand("list", "Conjecture ids");

    auto* fm = app.add_subcommand("formulas", "Registered formulas");
    fm->require_subcommand(1);
    auto* flist = fm->add_subcommand("list", "Ids and the identity each one states");
    std::string fid;
    int fk = 0;
    auto* feval = fm->add_subcommand("eval", "Evaluate a formula");
    feval->add_option("id", fid)->required();
    feval->add_option("--n", n_s, "n or a..b");
    feval->add_option("--k", fk, "Second argument");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) return cmd_genfun(c, pop, pats, weight, n_s, no_formula);
        if (*en) return cmd_enumerate(c, pop, pats, n_s, sample);
        if (*ver) return cmd_verify(c, scope, n_inv, n_perm, m_fpf, n_parity);
        if (*brun) return cmd_bijection_run(bname, binput, ambient);
        if (*bver) return cmd_bijection_verify(c, bname, n_s);
        if (*blist) {
            std::cout << "run:";
            for (const auto& s : runnable_bijections()) std::cout << " " << s;
            std::cout << "\nverify:";
            for (const auto& s : bijection_names()) std::cout << " " << s;
            std::cout << "\n";
            return 0;
        }
        if (*crun) return cmd_conjecture(c, cid, grid);
        if (*clist) {
            for (const auto& s : conjecture_ids()) std::cout << s << "\n";
            return 0;
        }
        if (*flist) return cmd_formulas_list(c);
        if (*feval) return cmd_formulas_eval(c, fid, n_s, fk);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
