#ifndef QRAM_SOLUTION_HPP
#define QRAM_SOLUTION_HPP

#include <map>
#include <vector>

#include "qram/config.hpp"
#include "qram/problem.hpp"

namespace qram {

/// One attempted upgrade of the global optimizer.
struct UpgradeStep {
  int task_id = 0;
  Configuration from;
  Configuration to;
  double ratio = 0.0;
  bool accepted = false;

  bool operator==(const UpgradeStep&) const = default;
};

struct Solution {
  Allocation allocation;
  std::map<int, double> task_utilities;  // assigned tasks only
  double utility = 0.0;                  // summed in ascending id order
  std::vector<double> usage;             // summed in ascending id order
  std::vector<int> dropped;              // tasks removed to make the base feasible
  std::vector<UpgradeStep> trace;
};

}  // namespace qram

#endif  // QRAM_SOLUTION_HPP
