#include "qram/problem.hpp"

#include <set>

#include "qram/errors.hpp"

namespace qram {

ProblemInstance::ProblemInstance(std::vector<Task> tasks, ResourceBounds bounds, Scenario scenario)
    : tasks_(std::move(tasks)), bounds_(std::move(bounds)), scenario_(std::move(scenario)) {
  if (bounds_.size() != kPhysicalResources)
    throw ArgumentError("ProblemInstance: physical instances use two resources");
  std::set<int> target_ids;
  for (const auto& t : scenario_.targets)
    if (!target_ids.insert(t.id).second) throw ArgumentError("ProblemInstance: duplicate target id");
  std::set<int> ids;
  for (const auto& t : tasks_) {
    if (!ids.insert(t.id).second) throw ArgumentError("ProblemInstance: duplicate task id");
    if (!target_ids.contains(t.target_ref))
      throw ArgumentError("ProblemInstance: task " + std::to_string(t.id) + " references unknown target");
  }
}

ProblemInstance ProblemInstance::from_scenario(const Scenario& scenario, const ResourceBounds& bounds,
                                               const ConfigSpace& grid) {
  std::vector<Task> tasks;
  tasks.reserve(scenario.targets.size());
  for (const auto& target : scenario.targets)
    tasks.push_back(Task{target.id, TaskType::Tracking, target.id, grid});
  return ProblemInstance(std::move(tasks), bounds, scenario);
}

const Task& ProblemInstance::task(int id) const {
  for (const auto& t : tasks_)
    if (t.id == id) return t;
  throw ContractViolation("ProblemInstance: unknown task id " + std::to_string(id));
}

const Target& ProblemInstance::target_of(const Task& task) const {
  const Target* t = scenario_.find(task.target_ref);
  if (t == nullptr) throw ContractViolation("ProblemInstance: unresolved target reference");
  return *t;
}

void validate_allocation(const Allocation& alloc, const ProblemInstance& instance) {
  for (const auto& [id, config] : alloc)
    if (!instance.task(id).config_space.contains(config))
      throw ContractViolation("allocation: configuration outside task " + std::to_string(id) + " grid");
}

double system_utility(const Allocation& alloc, const ProblemInstance& instance) {
  validate_allocation(alloc, instance);
  double u = 0.0;
  for (const auto& [id, config] : alloc) {
    const Task& task = instance.task(id);
    u += task_utility(config, instance.target_of(task));
  }
  return u;
}

std::vector<double> resource_usage(const Allocation& alloc, const ProblemInstance& instance) {
  validate_allocation(alloc, instance);
  std::vector<double> usage(instance.bounds().size(), 0.0);
  for (const auto& [id, config] : alloc) {
    const ResourceVector rv = resource_of(config);
    for (std::size_t j = 0; j < usage.size(); ++j) usage[j] += rv[j];
  }
  return usage;
}

bool is_feasible(const Allocation& alloc, const ProblemInstance& instance) {
  return within_bounds(resource_usage(alloc, instance), instance.bounds());
}

}  // namespace qram
