#include "qram/agent_optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <set>

#include "qram/errors.hpp"
#include "qram/quotient.hpp"
#include "qram/random.hpp"
#include "qram/rl_env.hpp"

namespace qram {

std::size_t decode_action(std::size_t action, const ConfigSpace& agent_grid, const ConfigSpace& task_grid) {
  if (action >= agent_grid.size()) throw ContractViolation("decode_action: action out of range");
  if (agent_grid == task_grid) return action;
  return task_grid.flat_index(task_grid.nearest(agent_grid.normalized(agent_grid.grid_index(action))));
}

std::size_t next_config_index(const AgentParams& params, const ConfigSpace& agent_grid, const Task& task,
                              const Target& target, std::size_t current) {
  if (params.n_actions() != agent_grid.size())
    throw ContractViolation("next_config: network outputs do not match the agent grid");
  const State s = encode_state(target, task.config_space, current);
  const ForwardOutput out = forward(params, s);
  return decode_action(greedy_action(out.logits), agent_grid, task.config_space);
}

Configuration next_config(const AgentParams& params, const ConfigSpace& agent_grid, const Task& task,
                          const Target& target, const Configuration& current) {
  const std::size_t idx = task.config_space.index_of(current);
  return task.config_space.at(next_config_index(params, agent_grid, task, target, idx));
}

NetworkProposer::NetworkProposer(const AgentParams& params, ConfigSpace agent_grid)
    : params_(params), agent_grid_(std::move(agent_grid)) {
  if (params_.n_actions() != agent_grid_.size())
    throw ArgumentError("NetworkProposer: network outputs do not match the agent grid");
}

std::size_t NetworkProposer::propose(const Task& task, const Target& target, std::size_t current) {
  return next_config_index(params_, agent_grid_, task, target, current);
}

FrontierOracleProposer::FrontierOracleProposer(const ProblemInstance& instance) {
  for (const auto& task : instance.tasks()) {
    const JobList list =
        upper_frontier(embed_task(task, instance.target_of(task), instance.bounds()), task.id);
    auto& next = successor_[task.id];
    for (std::size_t i = 0; i + 1 < list.size(); ++i)
      next[task.config_space.index_of(list[i].config)] = task.config_space.index_of(list[i + 1].config);
  }
}

std::size_t FrontierOracleProposer::propose(const Task& task, const Target&, std::size_t current) {
  const auto t = successor_.find(task.id);
  if (t == successor_.end()) return current;
  const auto it = t->second.find(current);
  return it == t->second.end() ? current : it->second;
}

namespace {

struct Slot {
  const Task* task;
  const Target* target;
  std::size_t current;
  ResourceVector demand;
  double utility;
  double resource;
  double weight;
  std::size_t upgrades = 0;
  bool active = true;
};

struct Pending {
  double priority;
  std::size_t slot;
  bool operator<(const Pending& o) const {
    if (priority != o.priority) return priority > o.priority;
    return slot < o.slot;
  }
};

std::vector<double> usage_of(const std::vector<Slot>& slots, std::size_t k, std::size_t replace = SIZE_MAX,
                             const ResourceVector* replacement = nullptr) {
  std::vector<double> usage(k, 0.0);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i].active) continue;
    const ResourceVector& rv = i == replace ? *replacement : slots[i].demand;
    for (std::size_t j = 0; j < k; ++j) usage[j] += rv[j];
  }
  return usage;
}

}  // namespace

Solution allocate_with_proposer(const ProblemInstance& instance, ConfigProposer& proposer,
                                const std::map<int, double>& priority_weights, AgentTiming* timing) {
  using clock = std::chrono::steady_clock;
  clock::duration query_time{};
  const auto start = clock::now();
  const ResourceBounds& bounds = instance.bounds();
  const std::size_t k = bounds.size();

  std::vector<Slot> slots;
  for (const auto& task : instance.tasks()) {
    const Target& target = instance.target_of(task);
    const std::size_t base = base_config_index(task.config_space, target, bounds);
    const Configuration c = task.config_space.at(base);
    const auto w = priority_weights.find(task.id);
    Slot s{&task, &target, base, resource_of(c), task_utility(c, target), 0.0,
           w == priority_weights.end() ? 1.0 : w->second};
    s.resource = compound_resource(s.demand, bounds);
    slots.push_back(std::move(s));
  }
  std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) { return a.task->id < b.task->id; });

  Solution sol;
  for (std::size_t i = slots.size(); i-- > 0 && !within_bounds(usage_of(slots, k), bounds);) {
    slots[i].active = false;
    sol.dropped.push_back(slots[i].task->id);
  }

  // proposal per slot: index, demand, utility, resource
  struct Proposal {
    std::size_t index;
    ResourceVector demand;
    double utility;
    double resource;
  };
  std::vector<Proposal> proposals(slots.size());
  std::set<Pending> queue;

  auto query = [&](std::size_t i) {
    Slot& s = slots[i];
    const auto q0 = clock::now();
    const std::size_t next = proposer.propose(*s.task, *s.target, s.current);
    query_time += clock::now() - q0;
    if (next >= s.task->config_space.size()) throw ContractViolation("proposer returned an invalid index");
    if (next == s.current) return;  // stationary proposal: exhausted
    const Configuration c = s.task->config_space.at(next);
    Proposal p{next, resource_of(c), task_utility(c, *s.target), 0.0};
    p.resource = compound_resource(p.demand, bounds);
    const double dr = p.resource - s.resource;
    const double quotient = utility_resource_quotient(p.utility - s.utility, dr);
    if (!(quotient > 0.0) || dr <= -kResourceEpsilon) return;  // not an upgrade
    proposals[i] = std::move(p);
    queue.insert({quotient * s.weight, i});
  };

  for (std::size_t i = 0; i < slots.size(); ++i)
    if (slots[i].active) query(i);

  while (!queue.empty()) {
    const Pending best = *queue.begin();
    queue.erase(queue.begin());
    Slot& s = slots[best.slot];
    Proposal& p = proposals[best.slot];
    UpgradeStep step{s.task->id, s.task->config_space.at(s.current), s.task->config_space.at(p.index),
                     best.priority, false};
    if (within_bounds(usage_of(slots, k, best.slot, &p.demand), bounds)) {
      step.accepted = true;
      s.current = p.index;
      s.demand = std::move(p.demand);
      s.utility = p.utility;
      s.resource = p.resource;
      if (++s.upgrades < s.task->config_space.size()) query(best.slot);
    }
    sol.trace.push_back(std::move(step));
  }

  for (const auto& s : slots) {
    if (!s.active) continue;
    sol.allocation[s.task->id] = s.task->config_space.at(s.current);
    sol.task_utilities[s.task->id] = s.utility;
  }
  sol.utility = sum_utilities(sol.task_utilities);
  sol.usage = usage_of(slots, k);
  if (timing != nullptr) {
    timing->query_s = std::chrono::duration<double>(query_time).count();
    timing->optimize_s = std::chrono::duration<double>(clock::now() - start - query_time).count();
  }
  return sol;
}

Solution allocate_with_agent(const AgentParams& params, const ConfigSpace& agent_grid,
                             const ProblemInstance& instance, const std::map<int, double>& priority_weights,
                             AgentTiming* timing) {
  NetworkProposer proposer(params, agent_grid);
  return allocate_with_proposer(instance, proposer, priority_weights, timing);
}

double frontier_deficit(const JobList& frontier, double resource, double utility) {
  double best = 0.0;
  for (const auto& p : frontier.points())
    if (p.resource <= resource) best = std::max(best, p.utility);
  if (best <= 0.0 || utility >= best) return 0.0;
  return (best - utility) / best;
}

double agent_frontier_quality(const AgentParams& params, const ConfigSpace& grid, const ResourceBounds& bounds,
                              std::size_t n_targets, std::uint64_t seed, double tolerance) {
  if (n_targets == 0) throw ArgumentError("agent_frontier_quality: no targets");
  Rng rng(seed);
  Task task;
  task.config_space = grid;
  std::size_t good = 0;
  for (std::size_t i = 0; i < n_targets; ++i) {
    const Target target = sample_target(rng, 0);
    const JobList frontier = upper_frontier(embed_task(task, target, bounds));
    const std::size_t a = next_config_index(params, grid, task, target, base_config_index(grid, target, bounds));
    const Configuration c = grid.at(a);
    if (frontier_deficit(frontier, compound_resource(resource_of(c), bounds), task_utility(c, target)) <= tolerance)
      ++good;
  }
  return static_cast<double>(good) / static_cast<double>(n_targets);
}

}  // namespace qram
