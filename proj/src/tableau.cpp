#include "permstat/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace permstat {

namespace {

using Rows = StandardYoungTableau::Rows;

// Row insertion; returns the (0-based) row where a box was added.
std::size_t row_insert(Rows& rows, int x) {
    for (std::size_t r = 0;; ++r) {
        if (r == rows.size()) rows.emplace_back();
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return r;
        }
        std::swap(*it, x);
    }
}

std::pair<std::size_t, std::size_t> locate(const Rows& rows, int v) {
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            if (rows[r][c] == v) return {r, c};
    throw std::logic_error("tableau entry not found");
}

}  // namespace

bool StandardYoungTableau::is_valid(const Rows& rows) {
    std::vector<char> seen;
    std::size_t total = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty()) return false;
        if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
        total += rows[r].size();
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c > 0 && rows[r][c] <= rows[r][c - 1]) return false;
            if (r > 0 && rows[r][c] <= rows[r - 1][c]) return false;
        }
    }
    seen.assign(total + 1, 0);
    for (const auto& row : rows)
        for (int v : row) {
            if (v < 1 || static_cast<std::size_t>(v) > total || seen[static_cast<std::size_t>(v)]) return false;
            seen[static_cast<std::size_t>(v)] = 1;
        }
    return true;
}

StandardYoungTableau::StandardYoungTableau(Rows rows) : rows_(std::move(rows)) {
    if (!is_valid(rows_)) throw std::invalid_argument("not a standard Young tableau: " + str());
}

StandardYoungTableau StandardYoungTableau::parse(std::string_view text) {
    const std::string s(text);
    if (s.empty()) return {};
    std::vector<std::string> parts;
    {
        std::stringstream ss(s);
        std::string part;
        while (std::getline(ss, part, '/')) parts.push_back(part);
    }
    for (const auto& part : parts)
        for (char c : part)
            if ((c < '0' || c > '9') && c != ',') throw std::invalid_argument("bad tableau '" + s + "'");
    // one comma anywhere switches every row to comma separated entries
    const bool wide = s.find(',') != std::string::npos;
    Rows rows;
    for (const auto& part : parts) {
        std::vector<int> row;
        if (wide) {
            std::stringstream rs(part);
            std::string tok;
            while (std::getline(rs, tok, ','))
                if (!tok.empty()) row.push_back(std::stoi(tok));
        } else {
            for (char c : part) row.push_back(c - '0');
        }
        rows.push_back(std::move(row));
    }
    if (!wide && !is_valid(rows)) {
        // a single column past 9 prints without commas
        Rows column;
        for (const auto& part : parts) column.push_back({std::stoi(part)});
        if (is_valid(column)) return StandardYoungTableau(std::move(column));
    }
    return StandardYoungTableau(std::move(rows));
}

int StandardYoungTableau::size() const {
    int n = 0;
    for (const auto& r : rows_) n += static_cast<int>(r.size());
    return n;
}

std::vector<int> StandardYoungTableau::shape() const {
    std::vector<int> s;
    for (const auto& r : rows_) s.push_back(static_cast<int>(r.size()));
    return s;
}

std::vector<int> StandardYoungTableau::descent_set() const {
    const int n = size();
    std::vector<std::size_t> row_of(static_cast<std::size_t>(n) + 1);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (int v : rows_[r]) row_of[static_cast<std::size_t>(v)] = r;
    std::vector<int> d;
    for (int i = 1; i < n; ++i)
        if (row_of[static_cast<std::size_t>(i + 1)] > row_of[static_cast<std::size_t>(i)]) d.push_back(i);
    return d;
}

StandardYoungTableau StandardYoungTableau::transpose() const {
    Rows t;
    if (!rows_.empty()) {
        t.resize(rows_.front().size());
        for (const auto& row : rows_)
            for (std::size_t c = 0; c < row.size(); ++c) t[c].push_back(row[c]);
    }
    StandardYoungTableau out;
    out.rows_ = std::move(t);
    return out;
}

std::string StandardYoungTableau::str() const {
    const bool wide = size() > 9;
    std::string s;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) s += '/';
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (wide && c) s += ',';
            s += std::to_string(rows_[r][c]);
        }
    }
    return s;
}

std::string StandardYoungTableau::pretty() const {
    std::string s;
    for (const auto& row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) s += ' ';
            s += std::to_string(row[c]);
        }
        s += '\n';
    }
    return s;
}

RskPair rsk(const Permutation& s) {
    Rows p, q;
    for (int i = 1; i <= s.size(); ++i) {
        const std::size_t r = row_insert(p, s(i));
        if (r == q.size()) q.emplace_back();
        q[r].push_back(i);
    }
    return {StandardYoungTableau(std::move(p)), StandardYoungTableau(std::move(q))};
}

Permutation inverse_rsk(const StandardYoungTableau& pt, const StandardYoungTableau& qt) {
    if (pt.shape() != qt.shape()) throw std::invalid_argument("inverse_rsk: tableaux have different shapes");
    Rows p = pt.rows(), q = qt.rows();
    const int n = pt.size();
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = n; i >= 1; --i) {
        auto [r, c] = locate(q, i);
        q[r].pop_back();
        int x = p[r][c];
        p[r].pop_back();
        if (q[r].empty()) {
            q.pop_back();
            p.pop_back();
        }
        for (std::size_t up = r; up-- > 0;) {
            auto& row = p[up];
            // largest entry smaller than x gets bumped out
            auto it = std::lower_bound(row.begin(), row.end(), x);
            --it;
            std::swap(*it, x);
        }
        w[static_cast<std::size_t>(i - 1)] = x;
    }
    return Permutation(std::move(w));
}

StandardYoungTableau rsk_involution(const Permutation& iota) {
    if (!iota.is_involution()) throw std::invalid_argument("rsk_involution: " + iota.str() + " is not an involution");
    return rsk(iota).p;
}

Permutation syt_to_involution(const StandardYoungTableau& t) { return inverse_rsk(t, t); }

StandardYoungTableau beissinger_insert(const StandardYoungTableau& t, int i, int n) {
    if (t.size() != n - 2) throw std::invalid_argument("beissinger_insert: tableau must have size n-2");
    if (i < 1 || i >= n) throw std::invalid_argument("beissinger_insert: need 1 <= i < n");
    Rows rows = t.rows();
    for (auto& row : rows)
        for (int& v : row)
            if (v >= i) ++v;
    const std::size_t r = row_insert(rows, i);
    if (r + 1 == rows.size()) rows.emplace_back();
    rows[r + 1].push_back(n);
    return StandardYoungTableau(std::move(rows));
}

Permutation transpose_map_involution(const Permutation& iota) {
    if (!iota.is_involution()) throw std::invalid_argument("transpose map: " + iota.str() + " is not an involution");
    if (contains(iota, Permutation{3, 2, 1}) && contains(iota, Permutation{1, 2, 3}))
        throw std::invalid_argument("transpose map: " + iota.str() + " avoids neither 123 nor 321");
    return syt_to_involution(rsk_involution(iota).transpose());
}

Permutation transpose_map_perm(const Permutation& s) {
    if (contains(s, Permutation{3, 2, 1}) && contains(s, Permutation{1, 2, 3}))
        throw std::invalid_argument("transpose map: " + s.str() + " avoids neither 123 nor 321");
    const auto [p, q] = rsk(s);
    return inverse_rsk(p.transpose(), q.transpose());
}

}  // namespace permstat
