#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/permutation.hpp"
#include "permstat/poly.hpp"

namespace permstat {

// Integer expressions used by the table data: literals, n, one summation variable, + - * / %,
// parentheses, binom(a,b), comparisons and && ||. Division floors; comparisons yield 0 or 1.
long long eval_int_expr(std::string_view expr, long long n, char var = 'k', long long var_value = 0);

struct TableTerm {
    std::string when;  // empty: always
    std::string sum_var;
    std::string sum_from, sum_to;
    std::string coeff = "1";
    std::string p = "0", q = "0", t = "0";
    std::string rec;  // empty: no recursive factor
    std::string tshift = "0";
};

struct TableRow {
    std::string id;
    std::string group;
    std::vector<Permutation> patterns;
    std::vector<Permutation> printed_patterns;  // the label as printed, when it differs
    bool barred = false;
    std::string anchor;
    std::string note;
    std::map<int, MultiPoly> base;
    std::vector<TableTerm> terms;
    std::vector<TableTerm> as_printed;  // empty unless the printed form differs
};

std::vector<TableRow> parse_table_rows(std::string_view json_text);
// Rows compiled into the library from data/multi_pattern_tables.json.
const std::vector<TableRow>& table_rows();
const TableRow* find_table_row(std::string_view id_or_patterns);

// The joint (p:inv, q:maj, t:des) generating function from a row; barred rows are converted.
MultiPoly evaluate_row(const TableRow& row, int n, bool as_printed = false);

// Canonical pattern set id such as "132,213"; pattern order in the argument does not matter.
MultiPoly multi_pattern_formula(std::string_view set_id, int n);

}  // namespace permstat
