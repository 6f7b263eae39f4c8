#ifndef CMBOUNDS_INEQ_HPP
#define CMBOUNDS_INEQ_HPP

#include <vector>

#include "cmbounds/graph.hpp"
#include "cmbounds/types.hpp"

namespace cmbounds {

// One half-space a's <= b on the unknown counterfactual share vector s.
// l1 is the market anchoring the left-hand side, l_star the market whose
// path minimized the right-hand side (l_star == l1 for the 2-cycle system).
// Indices are 0-based in memory, 1-based in all output.
struct Constraint {
    std::vector<double> a;
    double b = 0.0;
    int l1 = 0;
    int l_star = 0;
};

struct InequalitySystem {
    int num_goods = 0;
    MethodTag method_tag = MethodTag::two_cycle;
    std::vector<Constraint> constraints;  // exactly M, ordered by l1
};

// Largest M the brute-force path enumeration accepts.
inline constexpr int kOracleMaxMarkets = 10;

// Baseline system from 2-cycles only: for each market l1,
//   (delta_l1 - delta_cf)' s <= (delta_l1 - delta_cf)' share_l1.
InequalitySystem build_two_cycle_system(const MarketData& data, const Scenario& scen);

// Sharpest system over cycles of every length: the right-hand side for l1
// is min over l of dist[l1][l] + (delta_l - delta_cf)' share_l, with ties
// broken by the smallest market index. Equivalent to exhausting all cycles.
// Throws CyclicMonotonicityViolated when the APSP pass flagged a negative
// cycle, unless allow_cm_violation is set.
InequalitySystem build_sharp_system(const MarketData& data, const Scenario& scen,
                                    const ApspResult& apsp, bool allow_cm_violation = false);

// Reference implementation: enumerate every simple path l1,...,l_{K-1}
// through distinct markets and keep the minimum right-hand side per l1.
// Factorial in M; guarded by kOracleMaxMarkets (throws InstanceTooLarge).
InequalitySystem enumerate_all_cycles_oracle(const MarketData& data, const Scenario& scen);

}  // namespace cmbounds

#endif
