#include "permstat/serialize.hpp"

#include <stdexcept>

namespace permstat {

nlohmann::json to_json(const MultiPoly& p) {
    auto arr = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) arr.push_back({m.p, m.q, m.t, c});
    return arr;
}

MultiPoly poly_from_json(const nlohmann::json& j) {
    MultiPoly p;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 4) throw std::invalid_argument("polynomial term must be [e_p, e_q, e_t, c]");
        p.add_term({term[0].get<std::uint32_t>(), term[1].get<std::uint32_t>(), term[2].get<std::uint32_t>()}, term[3].get<std::int64_t>());
    }
    return p;
}

nlohmann::json to_json(const ConjectureReport& r) {
    nlohmann::json j{{"id", r.id}, {"grid", r.grid}, {"holds", r.holds()}};
    auto cells = nlohmann::json::array();
    for (const auto& c : r.cells) {
        nlohmann::json cell{{"label", c.label}, {"holds", c.holds}, {"proven", c.proven}, {"note", c.note}};
        if (c.witness) {
            const auto& w = *c.witness;
            cell["witness"] = {{"left", w.left}, {"right", w.right}, {"n", w.n}, {"left_poly", w.left_poly.str()},
                               {"right_poly", w.right_poly.str()}, {"left_terms", to_json(w.left_poly)},
                               {"right_terms", to_json(w.right_poly)}};
        }
        cells.push_back(std::move(cell));
    }
    j["cells"] = std::move(cells);
    if (r.seconds) j["seconds"] = *r.seconds;
    return j;
}

nlohmann::json to_json(const VerifyReport& r) {
    auto checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"group", c.group}, {"name", c.name}, {"anchor", c.anchor}, {"pass", c.pass}, {"detail", c.detail}});
    auto warnings = nlohmann::json::array();
    for (const auto& w : r.warnings) warnings.push_back({{"id", w.id}, {"message", w.message}});
    return {{"ok", r.ok()}, {"checks", checks}, {"warnings", warnings}};
}

nlohmann::json to_json(const BijectionCheck& c) {
    return {{"name", c.name}, {"n", c.n}, {"checked", c.checked}, {"failures", c.failures}, {"first_failure", c.first_failure}};
}

}  // namespace permstat
