#include "permstat/tables.hpp"

#include <cctype>
#include <mutex>
#include <nlohmann/json.hpp>
#include <shared_mutex>
#include <stdexcept>

namespace permstat {

namespace detail {
extern const std::string_view kTableJson;
}

namespace {

long long binom(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    long long r = 1;
    for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

long long floor_div(long long a, long long b) {
    if (b == 0) throw std::domain_error("division by zero in table expression");
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

class ExprParser {
public:
    ExprParser(std::string_view s, long long n, char var, long long value) : s_(s), n_(n), var_(var), value_(value) {}

    long long run() {
        const long long v = logic_or();
        skip();
        if (i_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    long long logic_or() {
        long long v = logic_and();
        while (eat("||")) {
            const long long r = logic_and();
            v = (v != 0 || r != 0);
        }
        return v;
    }
    long long logic_and() {
        long long v = compare();
        while (eat("&&")) {
            const long long r = compare();
            v = (v != 0 && r != 0);
        }
        return v;
    }
    long long compare() {
        long long v = additive();
        for (;;) {
            if (eat("==")) v = v == additive();
            else if (eat("!=")) v = v != additive();
            else if (eat("<=")) v = v <= additive();
            else if (eat(">=")) v = v >= additive();
            else if (eat("<")) v = v < additive();
            else if (eat(">")) v = v > additive();
            else return v;
        }
    }
    long long additive() {
        long long v = multiplicative();
        for (;;) {
            if (eat("+")) v += multiplicative();
            else if (eat("-")) v -= multiplicative();
            else return v;
        }
    }
    long long multiplicative() {
        long long v = unary();
        for (;;) {
            if (eat("*")) {
                v *= unary();
            } else if (eat("/")) {
                v = floor_div(v, unary());
            } else if (eat("%")) {
                const long long d = unary();
                v = v - d * floor_div(v, d);
            } else {
                return v;
            }
        }
    }
    long long unary() {
        if (eat("-")) return -unary();
        return primary();
    }
    long long primary() {
        skip();
        if (eat("(")) {
            const long long v = logic_or();
            if (!eat(")")) fail("expected ')'");
            return v;
        }
        if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            long long v = 0;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) v = v * 10 + (s_[i_++] - '0');
            return v;
        }
        if (eat("binom")) {
            if (!eat("(")) fail("expected '(' after binom");
            const long long a = logic_or();
            if (!eat(",")) fail("expected ','");
            const long long b = logic_or();
            if (!eat(")")) fail("expected ')'");
            return binom(a, b);
        }
        if (i_ < s_.size()) {
            const char c = s_[i_];
            if (c == 'n') {
                ++i_;
                return n_;
            }
            if (c == var_) {
                ++i_;
                return value_;
            }
        }
        fail("unexpected token");
    }

    bool eat(std::string_view tok) {
        skip();
        if (s_.substr(i_, tok.size()) != tok) return false;
        i_ += tok.size();
        return true;
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    [[noreturn]] void fail(const char* what) const {
        throw std::invalid_argument(std::string("table expression '") + std::string(s_) + "': " + what);
    }

    std::string_view s_;
    std::size_t i_ = 0;
    long long n_;
    char var_;
    long long value_;
};

std::vector<TableTerm> parse_terms(const nlohmann::json& arr) {
    std::vector<TableTerm> out;
    for (const auto& j : arr) {
        TableTerm t;
        t.when = j.value("when", "");
        if (j.contains("sum")) {
            const auto& s = j.at("sum");
            if (!s.is_array() || s.size() != 3) throw std::invalid_argument("table term: sum must be [var, from, to]");
            t.sum_var = s[0].get<std::string>();
            if (t.sum_var.size() != 1 || t.sum_var == "n") throw std::invalid_argument("table term: bad summation variable");
            t.sum_from = s[1].get<std::string>();
            t.sum_to = s[2].get<std::string>();
        }
        t.coeff = j.value("coeff", "1");
        t.p = j.value("p", "0");
        t.q = j.value("q", "0");
        t.t = j.value("t", "0");
        t.rec = j.value("rec", "");
        t.tshift = j.value("tshift", "0");
        out.push_back(std::move(t));
    }
    return out;
}

std::uint32_t exponent(const std::string& expr, long long n, char var, long long value, const std::string& row) {
    const long long e = eval_int_expr(expr, n, var, value);
    if (e < 0) throw std::domain_error("table row " + row + ": negative exponent from '" + expr + "' at n=" + std::to_string(n));
    return static_cast<std::uint32_t>(e);
}

}  // namespace

long long eval_int_expr(std::string_view expr, long long n, char var, long long var_value) {
    return ExprParser(expr, n, var, var_value).run();
}

std::vector<TableRow> parse_table_rows(std::string_view json_text) {
    const auto doc = nlohmann::json::parse(json_text);
    std::vector<TableRow> rows;
    for (const auto& j : doc.at("rows")) {
        TableRow r;
        r.id = j.at("id").get<std::string>();
        r.group = j.value("group", "");
        r.patterns = parse_pattern_list(j.at("patterns").get<std::string>());
        if (j.contains("printed_patterns")) r.printed_patterns = parse_pattern_list(j.at("printed_patterns").get<std::string>());
        r.barred = j.value("barred", false);
        r.anchor = j.value("anchor", "");
        r.note = j.value("note", "");
        const nlohmann::json base = j.value("base", nlohmann::json::object());
        for (const auto& [k, v] : base.items()) r.base[std::stoi(k)] = MultiPoly::parse(v.get<std::string>());
        r.terms = parse_terms(j.at("terms"));
        if (j.contains("as_printed")) r.as_printed = parse_terms(j.at("as_printed"));
        if (format_pattern_list(r.patterns) != r.id) throw std::invalid_argument("table row id " + r.id + " does not match its patterns");
        rows.push_back(std::move(r));
    }
    return rows;
}

const std::vector<TableRow>& table_rows() {
    static const std::vector<TableRow> rows = parse_table_rows(detail::kTableJson);
    return rows;
}

const TableRow* find_table_row(std::string_view id_or_patterns) {
    std::string key;
    try {
        key = format_pattern_list(parse_pattern_list(id_or_patterns));
    } catch (const std::invalid_argument&) {
        return nullptr;
    }
    for (const auto& r : table_rows())
        if (r.id == key) return &r;
    return nullptr;
}

namespace {

// Values of the row's own recurrence (barred form if the row is barred), memoized per row.
class RowMemo {
public:
    MultiPoly get(const TableRow& row, bool printed, int n) {
        if (n < 0) return {};
        const std::string key = row.id + (printed ? "#printed" : "");
        {
            std::shared_lock lock(mu_);
            auto it = values_.find(key);
            if (it != values_.end() && static_cast<int>(it->second.size()) > n) return it->second[static_cast<std::size_t>(n)];
        }
        std::vector<MultiPoly> have;
        {
            std::shared_lock lock(mu_);
            if (auto it = values_.find(key); it != values_.end()) have = it->second;
        }
        const auto& terms = printed ? row.as_printed : row.terms;
        for (int m = static_cast<int>(have.size()); m <= n; ++m) have.push_back(compute(row, terms, m, have));
        MultiPoly out = have[static_cast<std::size_t>(n)];
        std::unique_lock lock(mu_);
        auto& slot = values_[key];
        if (slot.size() < have.size()) slot = std::move(have);
        return out;
    }

private:
    static MultiPoly compute(const TableRow& row, const std::vector<TableTerm>& terms, int n, const std::vector<MultiPoly>& prev) {
        if (auto it = row.base.find(n); it != row.base.end()) return it->second;
        MultiPoly out;
        for (const auto& term : terms) {
            const char var = term.sum_var.empty() ? 'k' : term.sum_var[0];
            auto one = [&](long long v) {
                if (!term.when.empty() && eval_int_expr(term.when, n, var, v) == 0) return;
                const long long c = eval_int_expr(term.coeff, n, var, v);
                MultiPoly mono = MultiPoly::monomial(c, exponent(term.p, n, var, v, row.id), exponent(term.q, n, var, v, row.id),
                                                     exponent(term.t, n, var, v, row.id));
                if (!term.rec.empty()) {
                    const long long r = eval_int_expr(term.rec, n, var, v);
                    if (r < 0) return;
                    if (r >= n) throw std::logic_error("table row " + row.id + ": recursion does not decrease n");
                    const long long shift = eval_int_expr(term.tshift, n, var, v);
                    mono *= substitute(prev[static_cast<std::size_t>(r)], Substitution::t_shift(static_cast<int>(shift)));
                }
                out += mono;
            };
            if (term.sum_var.empty()) {
                one(0);
            } else {
                const long long lo = eval_int_expr(term.sum_from, n, var, 0), hi = eval_int_expr(term.sum_to, n, var, 0);
                for (long long v = lo; v <= hi; ++v) one(v);
            }
        }
        return out;
    }

    std::shared_mutex mu_;
    std::map<std::string, std::vector<MultiPoly>> values_;
};

RowMemo& row_memo() {
    static RowMemo memo;
    return memo;
}

}  // namespace

MultiPoly evaluate_row(const TableRow& row, int n, bool as_printed) {
    if (n < 0) throw std::invalid_argument("table row " + row.id + ": negative n");
    if (as_printed && row.as_printed.empty()) as_printed = false;
    MultiPoly f = row_memo().get(row, as_printed, n);
    if (!row.barred) return f;
    const int c = n * (n - 1) / 2;
    return reflect(f, c, c, std::max(n - 1, 0));
}

MultiPoly multi_pattern_formula(std::string_view set_id, int n) {
    const TableRow* row = find_table_row(set_id);
    if (!row) throw std::invalid_argument("no table row for pattern set '" + std::string(set_id) + "'");
    return evaluate_row(*row, n);
}

}  // namespace permstat
