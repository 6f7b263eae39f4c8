#ifndef CMBOUNDS_LP_HPP
#define CMBOUNDS_LP_HPP

#include <vector>

#include "cmbounds/ineq.hpp"
#include "cmbounds/types.hpp"

namespace cmbounds {

enum class LpSense { minimize, maximize };

// Optimize objective's over the polytope {s >= 0, 1's = 1, A s <= b}. The
// simplex equality and the box are implicit in every problem; only the
// half-spaces vary.
struct LpProblem {
    std::vector<double> objective;
    LpSense sense = LpSense::minimize;
    std::vector<std::vector<double>> halfspace_a;
    std::vector<double> halfspace_b;
};

enum class LpStatus { optimal, infeasible };

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    double value = 0.0;
    std::vector<double> point;
};

LpProblem make_problem(const InequalitySystem& sys, int good, LpSense sense);

// Dense two-phase simplex with Bland's pivoting rule. Deterministic given
// the input. Unboundedness cannot occur on a subset of the simplex and is
// treated as an internal error (std::logic_error).
LpSolution solve_lp(const LpProblem& problem);

// Per-good min and max of the counterfactual share over the polytope:
// 2J solves. Infeasibility of any solve (the polytope is shared, so it is
// all-or-nothing) yields feasible = false.
BoundsResult compute_bounds(const InequalitySystem& sys, int num_goods);

inline constexpr double kPivotTol = 1e-10;
inline constexpr double kFeasTol = 1e-8;

}  // namespace cmbounds

#endif
