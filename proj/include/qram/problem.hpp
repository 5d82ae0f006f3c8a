#ifndef QRAM_PROBLEM_HPP
#define QRAM_PROBLEM_HPP

#include <map>
#include <string>
#include <vector>

#include "qram/config.hpp"
#include "qram/perf_model.hpp"
#include "qram/resources.hpp"

namespace qram {

enum class TaskType { Tracking };

struct Task {
  int id = 0;
  TaskType task_type = TaskType::Tracking;
  int target_ref = 0;
  ConfigSpace config_space = ConfigSpace::default_grid();

  bool operator==(const Task&) const = default;
};

/// Chosen configuration per task id; a missing id means the task is dropped.
using Allocation = std::map<int, Configuration>;

class ProblemInstance {
 public:
  /// Validates unique task ids, resolvable targets and k == 2 bounds.
  ProblemInstance(std::vector<Task> tasks, ResourceBounds bounds, Scenario scenario);

  /// One tracking task per scenario target on the given grid.
  static ProblemInstance from_scenario(const Scenario& scenario, const ResourceBounds& bounds,
                                       const ConfigSpace& grid = ConfigSpace::default_grid());

  const std::vector<Task>& tasks() const { return tasks_; }
  const ResourceBounds& bounds() const { return bounds_; }
  const Scenario& scenario() const { return scenario_; }

  const Task& task(int id) const;
  const Target& target_of(const Task& task) const;

  bool operator==(const ProblemInstance&) const = default;

 private:
  std::vector<Task> tasks_;
  ResourceBounds bounds_;
  Scenario scenario_;
};

/// Throws ContractViolation for unknown ids or configurations outside the task's grid.
void validate_allocation(const Allocation& alloc, const ProblemInstance& instance);

/// Sum of task utilities over assigned tasks (ascending id order).
double system_utility(const Allocation& alloc, const ProblemInstance& instance);

/// Componentwise sum of resource_of over assigned configurations (ascending id order).
std::vector<double> resource_usage(const Allocation& alloc, const ProblemInstance& instance);

/// True iff resource_usage <= bounds in every component.
bool is_feasible(const Allocation& alloc, const ProblemInstance& instance);

}  // namespace qram

#endif  // QRAM_PROBLEM_HPP
