#ifndef QRAM_BRUTE_FORCE_HPP
#define QRAM_BRUTE_FORCE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "qram/classic_solver.hpp"
#include "qram/problem.hpp"
#include "qram/solution.hpp"

namespace qram {

inline constexpr double kDefaultStateCap = 1e8;

/// Number of joint states Prod_i (|options_i| + 1), the +1 being "dropped".
double state_count(const PointProblem& problem);

/// Exhaustive search over every combination (each task may also be dropped).
/// Returns a feasible utility-maximal allocation; among equal utilities the
/// lexicographically smallest choice vector wins (dropped < option 0 < option 1 ...,
/// tasks in ascending id order). Throws CapacityError above `state_cap`.
Solution optimal_allocation(const PointProblem& problem, double state_cap = kDefaultStateCap);

/// Per task id, the configuration indices that may be used.
using ConfigRestriction = std::vector<std::vector<std::size_t>>;

/// Physical-instance wrapper. `restriction`, when given, holds one index list
/// per task in instance order.
Solution optimal_allocation(const ProblemInstance& instance,
                            const std::optional<ConfigRestriction>& restriction = std::nullopt,
                            double state_cap = kDefaultStateCap);

/// Single-resource view of a problem: each demand becomes its compound
/// resource and the budget becomes Sum_j w_j (a relaxation of the vector bounds).
PointProblem compound_only(const PointProblem& problem);

/// Multiple-choice knapsack DP with demands rounded up to multiples of `step`
/// and the budget rounded down, so every DP solution is truly feasible.
/// Requires a single resource (UnsupportedError otherwise).
Solution optimal_allocation_dp(const PointProblem& problem, double step);

}  // namespace qram

#endif  // QRAM_BRUTE_FORCE_HPP
