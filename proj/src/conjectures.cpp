#include "permstat/conjectures.hpp"

#include <algorithm>
#include <stdexcept>

namespace permstat {

namespace {

int binom2(int n) { return n * (n - 1) / 2; }

// table[n][i] = genfun of {patterns[i]} at size n.
std::vector<std::vector<MultiPoly>> genfun_table(Population pop, const std::vector<Permutation>& patterns, int n_max,
                                                 const Weight& w, const ConjectureOptions& opt) {
    std::vector<std::vector<Permutation>> sets;
    for (const auto& p : patterns) sets.push_back({p});
    std::vector<std::vector<MultiPoly>> table;
    for (int n = 0; n <= n_max; ++n) {
        if (pop == Population::Fpf && n % 2 == 1) {
            table.emplace_back(patterns.size());
            continue;
        }
        table.push_back(genfun_many(pop, n, sets, w, opt.caps, opt.par));
    }
    return table;
}

std::string join_ids(const std::vector<Permutation>& ps, const std::vector<int>& idx) {
    std::string s = "{";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ',';
        s += ps[static_cast<std::size_t>(idx[i])].str();
    }
    return s + "}";
}

// Compares the partition by genfun sequence with the partition by orbit representative.
ConjectureCell compare_classes(const std::string& label, const std::vector<Permutation>& patterns,
                               const std::vector<std::vector<MultiPoly>>& table, const std::vector<Permutation>& orbit_rep) {
    const std::size_t count = patterns.size();
    auto same_seq = [&](std::size_t a, std::size_t b) {
        for (const auto& row : table)
            if (row[a] != row[b]) return false;
        return true;
    };
    std::vector<std::vector<int>> classes;
    std::vector<int> cls_of(count, -1);
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t c = 0; c < classes.size(); ++c)
            if (same_seq(static_cast<std::size_t>(classes[c][0]), i)) {
                classes[c].push_back(static_cast<int>(i));
                cls_of[i] = static_cast<int>(c);
                break;
            }
        if (cls_of[i] < 0) {
            cls_of[i] = static_cast<int>(classes.size());
            classes.push_back({static_cast<int>(i)});
        }
    }
    ConjectureCell cell;
    cell.label = label;
    cell.note = "classes:";
    for (const auto& c : classes) cell.note += " " + join_ids(patterns, c);
    for (std::size_t a = 0; a < count && cell.holds; ++a)
        for (std::size_t b = a + 1; b < count; ++b) {
            const bool predicted = orbit_rep[a] == orbit_rep[b];
            const bool observed = cls_of[a] == cls_of[b];
            if (predicted == observed) continue;
            cell.holds = false;
            Witness w{patterns[a].str(), patterns[b].str(), static_cast<int>(table.size()) - 1, {}, {}};
            if (predicted) {
                // first size where the genfuns differ
                for (std::size_t n = 0; n < table.size(); ++n)
                    if (table[n][a] != table[n][b]) {
                        w.n = static_cast<int>(n);
                        break;
                    }
            } else {
                cell.note += "; outside the predicted class but equal for every n in the grid";
            }
            w.left_poly = table[static_cast<std::size_t>(w.n)][a];
            w.right_poly = table[static_cast<std::size_t>(w.n)][b];
            cell.witness = std::move(w);
            break;
        }
    return cell;
}

Permutation orbit_min(const Permutation& p, std::initializer_list<Symmetry> group) {
    Permutation best = p;
    for (Symmetry g : group) best = std::min(best, apply(g, p));
    return best;
}

ConjectureReport class_sweep(const std::string& id, int max_len, int n_max, Stat stat, std::initializer_list<Symmetry> group,
                             const ConjectureOptions& opt) {
    ConjectureReport rep;
    rep.id = id;
    rep.grid = "pattern length 1.." + std::to_string(max_len) + ", involutions n=0.." + std::to_string(n_max);
    for (int len = 1; len <= max_len; ++len) {
        const auto patterns = enumerate(Population::Perm, len, Caps{std::max(len, 10), 14});
        std::vector<Permutation> reps;
        for (const auto& p : patterns) reps.push_back(orbit_min(p, group));
        const auto table = genfun_table(Population::Inv, patterns, n_max, Weight::single(stat), opt);
        rep.cells.push_back(compare_classes("len=" + std::to_string(len), patterns, table, reps));
    }
    return rep;
}

Witness first_difference(const std::string& l, const std::string& r, const std::vector<MultiPoly>& left,
                         const std::vector<MultiPoly>& right) {
    for (std::size_t n = 0; n < left.size(); ++n)
        if (left[n] != right[n]) return {l, r, static_cast<int>(n), left[n], right[n]};
    throw std::logic_error("first_difference: sequences agree");
}

// Index of p in the list, appending it when new.
std::size_t intern(std::vector<Permutation>& list, const Permutation& p) {
    auto it = std::find(list.begin(), list.end(), p);
    if (it != list.end()) return static_cast<std::size_t>(it - list.begin());
    list.push_back(p);
    return list.size() - 1;
}

std::vector<MultiPoly> column(const std::vector<std::vector<MultiPoly>>& table, std::size_t i) {
    std::vector<MultiPoly> c;
    for (const auto& row : table) c.push_back(row[i]);
    return c;
}

// Checks left(n) == q^{binom(n,2)} right(n; 1/q) for each n.
ConjectureCell reversal_cell(const std::string& label, const Permutation& a, const Permutation& b,
                             const std::vector<MultiPoly>& left, const std::vector<MultiPoly>& right) {
    ConjectureCell cell;
    cell.label = label;
    for (std::size_t n = 0; n < left.size(); ++n) {
        const MultiPoly rev = reverse_in_q(right[n], binom2(static_cast<int>(n)));
        if (left[n] != rev) {
            cell.holds = false;
            cell.witness = Witness{a.str(), b.str(), static_cast<int>(n), left[n], rev};
            cell.note = "right side shown reversed";
            break;
        }
    }
    return cell;
}

std::string pop_word(Population pop) { return pop == Population::Perm ? "permutations" : "involutions"; }

}  // namespace

bool ConjectureReport::holds() const {
    return std::all_of(cells.begin(), cells.end(), [](const ConjectureCell& c) { return c.holds; });
}

bool ConjectureReport::proven_cells_hold() const {
    return std::all_of(cells.begin(), cells.end(), [](const ConjectureCell& c) { return c.holds || !c.proven; });
}

std::string ConjectureReport::human() const {
    std::string s = id + " (" + grid + "): " + (holds() ? "holds" : "FAILS") + "\n";
    for (const auto& c : cells) {
        s += "  " + c.label + "  " + (c.holds ? "holds" : "fails") + (c.proven ? " [proven]" : "");
        if (!c.note.empty()) s += "  " + c.note;
        s += "\n";
        if (c.witness) {
            const auto& w = *c.witness;
            s += "    witness n=" + std::to_string(w.n) + ": " + w.left + " -> " + w.left_poly.str() + "\n";
            s += "    " + std::string(std::to_string(w.n).size() + 12, ' ') + w.right + " -> " + w.right_poly.str() + "\n";
        }
    }
    if (seconds) s += "  wall time " + std::to_string(*seconds) + " s\n";
    return s;
}

ConjectureReport check_ii_wilf_symmetry_classes(int max_len, int n_max, const ConjectureOptions& opt) {
    return class_sweep("ii-wilf", max_len, n_max, Stat::Inv, {Symmetry::r1, Symmetry::r_1, Symmetry::R180}, opt);
}

ConjectureReport check_mi_wilf_classes(int max_len, int n_max, const ConjectureOptions& opt) {
    return class_sweep("mi-wilf", max_len, n_max, Stat::Maj, {Symmetry::r1}, opt);
}

ConjectureReport check_ii_wilf_separation(int n, const ConjectureOptions& opt) {
    const Permutation p231{2, 3, 1}, p312{3, 1, 2};
    const Permutation a = direct_sum(p231, p231), b = direct_sum(p312, p231);
    const auto polys = genfun_many(Population::Inv, n, {{a}, {b}}, Weight::single(Stat::Inv), opt.caps, opt.par);
    ConjectureReport rep;
    rep.id = "ii-wilf-separation";
    rep.grid = "involutions n=" + std::to_string(n);
    ConjectureCell cell;
    cell.label = a.str() + " vs " + b.str();
    cell.proven = true;
    cell.holds = polys[0] != polys[1];
    cell.note = cell.holds ? "II_n differ" : "II_n agree";
    cell.witness = Witness{a.str(), b.str(), n, polys[0], polys[1]};
    rep.cells.push_back(std::move(cell));
    return rep;
}

std::pair<Permutation, Permutation> symmetry_pair(int k, int m) {
    if (k < 0 || k >= m) throw std::invalid_argument("symmetry_pair: need 0 <= k < m");
    return {direct_sum(Permutation::identity(k), Permutation::decreasing(m - k)),
            direct_sum(Permutation::decreasing(k + 1), Permutation::identity(m - k - 1))};
}

ConjectureReport check_symmetry_pair(int k, int m, int n_max, Population pop, const ConjectureOptions& opt) {
    const auto [a, b] = symmetry_pair(k, m);
    const auto table = genfun_table(pop, {a, b}, n_max, Weight::single(Stat::Maj), opt);
    ConjectureReport rep;
    rep.id = pop == Population::Perm ? "conj" : "conj-invo";
    rep.grid = "k=" + std::to_string(k) + ", m=" + std::to_string(m) + ", " + pop_word(pop) + " n=0.." + std::to_string(n_max);
    rep.cells.push_back(reversal_cell(a.str() + " vs " + b.str(), a, b, column(table, 0), column(table, 1)));
    return rep;
}

ConjectureReport check_symmetry_pairs(int m_max, int n_max, Population pop, const ConjectureOptions& opt) {
    std::vector<Permutation> pats;
    std::vector<std::tuple<int, int, std::size_t, std::size_t>> cells;
    for (int m = 1; m <= m_max; ++m)
        for (int k = 0; k < m; ++k) {
            const auto [a, b] = symmetry_pair(k, m);
            cells.emplace_back(m, k, intern(pats, a), intern(pats, b));
        }
    const auto table = genfun_table(pop, pats, n_max, Weight::single(Stat::Maj), opt);
    ConjectureReport rep;
    rep.id = pop == Population::Perm ? "conj" : "conj-invo";
    rep.grid = "1 <= m <= " + std::to_string(m_max) + ", 0 <= k < m, " + pop_word(pop) + " n=0.." + std::to_string(n_max);
    for (const auto& [m, k, ia, ib] : cells) {
        auto cell = reversal_cell("m=" + std::to_string(m) + " k=" + std::to_string(k) + " " + pats[ia].str() + " vs " +
                                      pats[ib].str(),
                                  pats[ia], pats[ib], column(table, ia), column(table, ib));
        rep.cells.push_back(std::move(cell));
    }
    return rep;
}

ConjectureReport check_dokos_pairs(int m_max, int k_max, int n_max, const ConjectureOptions& opt) {
    struct Pair {
        int m, k;
        std::string family;
        std::size_t a, b;
    };
    std::vector<Permutation> pats;
    std::vector<Pair> pairs;
    const Permutation one{1};
    for (int m = 1; m <= m_max; ++m)
        for (int k = 1; k <= k_max; ++k) {
            const Permutation inc_first[] = {Permutation::identity(m), one, Permutation::decreasing(k)};
            const Permutation dec_first[] = {Permutation::decreasing(m), one, Permutation::identity(k)};
            pairs.push_back({m, k, "132/231", intern(pats, inflate(Permutation{1, 3, 2}, inc_first)),
                             intern(pats, inflate(Permutation{2, 3, 1}, inc_first))});
            pairs.push_back({m, k, "213/312", intern(pats, inflate(Permutation{2, 1, 3}, dec_first)),
                             intern(pats, inflate(Permutation{3, 1, 2}, dec_first))});
        }
    const auto table = genfun_table(Population::Perm, pats, n_max, Weight::single(Stat::Maj), opt);
    ConjectureReport rep;
    rep.id = "dokos";
    rep.grid = "1 <= m <= " + std::to_string(m_max) + ", 1 <= k <= " + std::to_string(k_max) + ", permutations n=0.." +
               std::to_string(n_max);
    for (const auto& pr : pairs) {
        ConjectureCell cell;
        cell.label = "m=" + std::to_string(pr.m) + " k=" + std::to_string(pr.k) + " " + pats[pr.a].str() + " vs " + pats[pr.b].str();
        cell.proven = pr.k == 1;
        if (cell.proven) cell.note = "k=1 is a theorem";
        const auto l = column(table, pr.a), r = column(table, pr.b);
        if (l != r) {
            cell.holds = false;
            cell.witness = first_difference(pats[pr.a].str(), pats[pr.b].str(), l, r);
        }
        rep.cells.push_back(std::move(cell));
    }
    return rep;
}

ConjectureReport explore_r0_pairs(int max_len, int n_max, Population pop, const ConjectureOptions& opt) {
    ConjectureReport rep;
    rep.id = "r0-pairs";
    rep.grid = "pattern length 1.." + std::to_string(max_len) + ", " + pop_word(pop) + " n=0.." + std::to_string(n_max);
    for (int len = 1; len <= max_len; ++len) {
        const auto all = enumerate(Population::Perm, len, Caps{std::max(len, 10), 14});
        std::vector<Permutation> pats;
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (const auto& p : all) {
            const Permutation r = reverse(p);
            if (r < p) continue;
            pairs.emplace_back(intern(pats, p), intern(pats, r));
        }
        const auto table = genfun_table(pop, pats, n_max, Weight::single(Stat::Maj), opt);
        ConjectureCell cell;
        cell.label = "len=" + std::to_string(len);
        std::string yes, no;
        for (const auto& [ia, ib] : pairs) {
            const auto c = reversal_cell("", pats[ia], pats[ib], column(table, ia), column(table, ib));
            (c.holds ? yes : no) += " " + pats[ia].str() + "/" + pats[ib].str();
        }
        // exploratory: a pair that fails is information, not a counterexample
        cell.note = "reversal pairs:" + (yes.empty() ? std::string(" none") : yes) + "; others:" + (no.empty() ? std::string(" none") : no);
        rep.cells.push_back(std::move(cell));
    }
    return rep;
}

const std::vector<std::string>& conjecture_ids() {
    static const std::vector<std::string> ids{"ii-wilf", "ii-wilf-separation", "mi-wilf", "conj", "conj-invo", "dokos", "r0-pairs"};
    return ids;
}

ConjectureReport run_conjecture(const std::string& id, const ConjectureGrid& g, const ConjectureOptions& opt) {
    auto n_or = [&](int def) { return g.n_max >= 0 ? g.n_max : def; };
    if (id == "ii-wilf") return check_ii_wilf_symmetry_classes(g.max_len, n_or(10), opt);
    if (id == "ii-wilf-separation") return check_ii_wilf_separation(n_or(8), opt);
    if (id == "mi-wilf") return check_mi_wilf_classes(g.max_len, n_or(9), opt);
    if (id == "conj" || id == "conj-invo") {
        const Population pop = id == "conj" ? Population::Perm : Population::Inv;
        if (g.k >= 0) return check_symmetry_pair(g.k, g.m_max, n_or(8), pop, opt);
        return check_symmetry_pairs(g.m_max, n_or(8), pop, opt);
    }
    if (id == "dokos") return check_dokos_pairs(g.m_max, g.k_max, n_or(8), opt);
    if (id == "r0-pairs") return explore_r0_pairs(g.max_len, n_or(8), Population::Perm, opt);
    throw std::invalid_argument("unknown conjecture '" + id + "'");
}

}  // namespace permstat
