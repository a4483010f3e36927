#pragma once

#include <string>
#include <vector>

#include "permstat/oracle.hpp"

namespace permstat {

struct VerifyCheck {
    std::string group;   // formulas, symmetries, zeros, parity, bijections, cardinalities
    std::string name;
    std::string anchor;  // the identity being checked
    bool pass = true;
    std::string detail;
};

// A discrepancy between the printed statement and the oracle that the library resolves.
struct VerifyWarning {
    std::string id;
    std::string message;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    std::vector<VerifyWarning> warnings;
    bool ok() const;
    std::string human() const;
};

struct VerifyOptions {
    // all, formulas, symmetries, zeros, parity, bijections, cardinalities, errata, or a formula id
    std::string scope = "all";
    int n_inv = 12;   // involution lengths
    int n_perm = 8;   // permutation lengths
    int m_fpf = 6;    // fixed-point-free half lengths
    int n_parity = 13;
    Caps caps;
    ParallelOptions par;
};

const std::vector<std::string>& verify_scopes();
VerifyReport run_verify(const VerifyOptions& opt);

}  // namespace permstat
