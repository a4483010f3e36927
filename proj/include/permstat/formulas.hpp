#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/oracle.hpp"
#include "permstat/poly.hpp"

namespace permstat {

MultiPoly catalan_q(int n);
MultiPoly ii_231(int n);
MultiPoly bar_ifi_132(int m);
MultiPoly bar_ifi_213(int m);
MultiPoly bar_ii_132(int n);
MultiPoly ifi_321(int m);
MultiPoly ii_321(int n);
MultiPoly seq_A(int m, int l);
MultiPoly seq_B(int m, int l);
MultiPoly bar_ii_123(int n);
MultiPoly bar_ifi_123(int m);
MultiPoly mi_231(int n);
// The product with the lower index k = 0 exactly as printed; kept only to report the discrepancy.
MultiPoly mi_231_as_printed(int n);
// F_{2m}(q,t) and M_n(q,t): comaj on q, asc on t.
MultiPoly mfi_132(int m);
MultiPoly mi_132(int n);
// MI_n(132) with maj, read off M_n at t = 1 by reversal.
MultiPoly mi_132_maj(int n);
MultiPoly mi_321(int n);
MultiPoly mi_123(int n);
MultiPoly mi_321_t_le(int n, int k);
MultiPoly mi_321_t_eq(int n, int k);
MultiPoly mfi_321(int m);
MultiPoly bar_mfi_123(int m);

// How to compute a formula's value from the brute-force oracle.
struct OracleSpec {
    enum class Kind { Class, CycleInsertionA, CycleInsertionB };
    Kind kind = Kind::Class;
    Population population = Population::Inv;
    std::vector<Permutation> patterns;
    Weight weight;
    bool half_index = false;  // argument m stands for length 2m
    TwoCycleFilter::Kind filter = TwoCycleFilter::Kind::None;  // second argument is the two-cycle bound
};

struct FormulaInfo {
    std::string id;
    std::string anchor;
    int arity = 1;
    std::function<MultiPoly(int, int)> eval;
    OracleSpec oracle;
    int min_arg = 0;
};

class FormulaRegistry {
public:
    static const FormulaRegistry& instance();
    const std::vector<FormulaInfo>& list() const { return formulas_; }
    const FormulaInfo* find(std::string_view id) const;
    MultiPoly eval(std::string_view id, int n, int k = 0) const;

private:
    FormulaRegistry();
    std::vector<FormulaInfo> formulas_;
};

// Oracle value for a registered formula at (n, k); the first argument is a length, or a half-length for half_index formulas.
MultiPoly oracle_value(const FormulaInfo& f, int n, int k, SnapshotCache& cache);
// Valid second arguments for arity-2 formulas at first argument n.
std::vector<int> second_args(const FormulaInfo& f, int n);

}  // namespace permstat
