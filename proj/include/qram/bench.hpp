#ifndef QRAM_BENCH_HPP
#define QRAM_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "qram/config.hpp"
#include "qram/problem.hpp"
#include "qram/weights_io.hpp"

namespace qram {

/// splitmix64 mix of a master seed with two coordinates; used to give every
/// (target count, run) pair of a bench its own scenario seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b);

std::vector<std::size_t> target_counts(std::size_t first, std::size_t last, std::size_t step);

struct UtilityRow {
  std::size_t targets = 0;
  double classic_mean = 0.0;
  double agent_mean = 0.0;
  double ratio_mean = 0.0;  // mean over runs of agent / classic
  double ratio_std = 0.0;
};

/// Paired classic vs agent solves on `runs` seeded scenarios per target count,
/// default bounds for the target count.
std::vector<UtilityRow> bench_utility(const AgentModel& agent, std::span<const std::size_t> targets,
                                      std::size_t runs, std::uint64_t master_seed);
void write_utility_csv(std::ostream& out, std::span<const UtilityRow> rows);

struct TargetRuntimeRow {
  std::size_t targets = 0;
  double classic_median_s = 0.0;
  double agent_median_s = 0.0;
};

/// Wall clock of a full classic solve vs a full agent solve (default grid).
std::vector<TargetRuntimeRow> bench_runtime_by_targets(const AgentModel& agent, std::span<const std::size_t> targets,
                                                       std::size_t runs, std::uint64_t master_seed);
void write_target_runtime_csv(std::ostream& out, std::span<const TargetRuntimeRow> rows);

/// Grid sizes (dwell, duration, power) used for a configuration count c;
/// 90 is the default grid itself. Throws ArgumentError for counts without a mapping.
GridIndex grid_shape_for(std::size_t configs);
std::vector<std::size_t> default_config_sweep();

struct ConfigRuntimeRow {
  std::size_t configs = 0;
  double classic_median_s = 0.0;  // embed + hull of one task
  double agent_median_s = 0.0;    // one encode + forward + decode
};

std::vector<ConfigRuntimeRow> bench_runtime_by_configs(const AgentModel& agent, std::span<const std::size_t> configs,
                                                       std::size_t runs, std::uint64_t master_seed);
void write_config_runtime_csv(std::ostream& out, std::span<const ConfigRuntimeRow> rows);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

/// Closed-form operation counts: classic t c log c against agent t c l n^2
/// for a constant, linear and quadratic growth of c with t.
void write_complexity_model_csv(std::ostream& out, std::span<const std::size_t> targets, std::size_t layers,
                                std::size_t neurons);

/// Nested configuration spaces for the refinement demo, smallest first.
/// Durations {2, 6, 10} ms and powers {1, 2, 4} kW stay fixed while the dwell
/// grid over [100, 1100] ms is refined by halving: 2, 3 and 5 values.
std::vector<ConfigSpace> remark1_chain();

/// Stored 4-target instance on which the greedy solver loses utility when the
/// configuration space grows while the true optimum does not decrease.
struct Remark1Setup {
  std::uint64_t scenario_seed;
  double occupancy_bound;
  double power_bound;
};
Remark1Setup remark1_setup();
ProblemInstance remark1_instance(const Remark1Setup& setup, const ConfigSpace& grid);

struct Remark1Row {
  std::size_t configs = 0;
  double greedy_utility = 0.0;
  double optimal_utility = 0.0;
};

std::vector<Remark1Row> run_remark1(const Remark1Setup& setup);
void write_remark1_csv(std::ostream& out, std::span<const Remark1Row> rows);

/// True when some subset pair has greedy strictly decreasing while the optimum
/// does not decrease.
bool exhibits_greedy_regression(std::span<const Remark1Row> rows);

}  // namespace qram

#endif  // QRAM_BENCH_HPP
