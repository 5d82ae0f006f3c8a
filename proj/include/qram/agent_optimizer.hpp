#ifndef QRAM_AGENT_OPTIMIZER_HPP
#define QRAM_AGENT_OPTIMIZER_HPP

#include <cstddef>
#include <map>
#include <optional>

#include "qram/classic_solver.hpp"
#include "qram/config.hpp"
#include "qram/network.hpp"
#include "qram/problem.hpp"
#include "qram/solution.hpp"

namespace qram {

/// Source of "next configuration" proposals for the upgrade loop.
class ConfigProposer {
 public:
  virtual ~ConfigProposer() = default;
  /// Index (in the task's grid) of the proposed successor of `current`.
  virtual std::size_t propose(const Task& task, const Target& target, std::size_t current) = 0;
};

/// Agent action -> configuration of a task grid. Identity when the task grid is
/// the agent's grid; otherwise the nearest point in normalized grid coordinates.
std::size_t decode_action(std::size_t action, const ConfigSpace& agent_grid, const ConfigSpace& task_grid);

/// Greedy policy of the network: encode, forward, argmax, decode.
std::size_t next_config_index(const AgentParams& params, const ConfigSpace& agent_grid, const Task& task,
                              const Target& target, std::size_t current);
Configuration next_config(const AgentParams& params, const ConfigSpace& agent_grid, const Task& task,
                          const Target& target, const Configuration& current);

class NetworkProposer final : public ConfigProposer {
 public:
  NetworkProposer(const AgentParams& params, ConfigSpace agent_grid);
  std::size_t propose(const Task& task, const Target& target, std::size_t current) override;

 private:
  const AgentParams& params_;
  ConfigSpace agent_grid_;
};

/// Returns the next job-list point of the task (the classic solver's successor),
/// or `current` when it is the last one or not on the frontier.
class FrontierOracleProposer final : public ConfigProposer {
 public:
  explicit FrontierOracleProposer(const ProblemInstance& instance);
  std::size_t propose(const Task& task, const Target& target, std::size_t current) override;

 private:
  std::map<int, std::map<std::size_t, std::size_t>> successor_;
};

struct AgentTiming {
  double query_s = 0.0;
  double optimize_s = 0.0;
};

/// Upgrade loop driven by proposals.
///
/// Tasks start at their base configuration (tasks dropped from the highest id
/// down while the bases are infeasible). Each task holds one proposal with
/// priority weight * quotient. The best (lower id on ties) is applied when the
/// resource vector stays within bounds and the proposal is re-queried;
/// otherwise the task is exhausted. Proposals that do not raise utility, that
/// lower the resource, or that repeat the current configuration exhaust the
/// task, as does exceeding |ConfigSpace| upgrades.
Solution allocate_with_proposer(const ProblemInstance& instance, ConfigProposer& proposer,
                                const std::map<int, double>& priority_weights = {},
                                AgentTiming* timing = nullptr);

Solution allocate_with_agent(const AgentParams& params, const ConfigSpace& agent_grid,
                             const ProblemInstance& instance, const std::map<int, double>& priority_weights = {},
                             AgentTiming* timing = nullptr);

/// Relative utility shortfall of a (resource, utility) point against the best
/// frontier point using at most that resource; 0 when it is on or above.
double frontier_deficit(const JobList& frontier, double resource, double utility);

/// Fraction of `n_targets` sampled targets whose greedy action from the base
/// configuration has frontier_deficit <= tolerance.
double agent_frontier_quality(const AgentParams& params, const ConfigSpace& grid, const ResourceBounds& bounds,
                              std::size_t n_targets, std::uint64_t seed, double tolerance);

}  // namespace qram

#endif  // QRAM_AGENT_OPTIMIZER_HPP
