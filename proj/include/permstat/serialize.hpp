#pragma once

#include <nlohmann/json.hpp>

#include "permstat/bijection_checks.hpp"
#include "permstat/conjectures.hpp"
#include "permstat/poly.hpp"
#include "permstat/verify.hpp"

namespace permstat {

// [[e_p, e_q, e_t, c], ...] in term order.
nlohmann::json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ConjectureReport& r);
nlohmann::json to_json(const VerifyReport& r);
nlohmann::json to_json(const BijectionCheck& c);

}  // namespace permstat
