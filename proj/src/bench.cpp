#include "qram/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "qram/agent_optimizer.hpp"
#include "qram/brute_force.hpp"
#include "qram/classic_solver.hpp"
#include "qram/errors.hpp"
#include "qram/perf_model.hpp"
#include "qram/rl_env.hpp"

namespace qram {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 == 1 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::ostream& csv(std::ostream& out) { return out << std::setprecision(12); }

volatile std::size_t sink = 0;

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(splitmix64(master) ^ a) ^ b);
}

std::vector<std::size_t> target_counts(std::size_t first, std::size_t last, std::size_t step) {
  if (first == 0 || last < first || step == 0) throw ArgumentError("target range must satisfy 1 <= first <= last, step > 0");
  std::vector<std::size_t> out;
  for (std::size_t t = first; t <= last; t += step) out.push_back(t);
  return out;
}

std::vector<UtilityRow> bench_utility(const AgentModel& agent, std::span<const std::size_t> targets,
                                      std::size_t runs, std::uint64_t master_seed) {
  if (runs == 0) throw ArgumentError("bench_utility: at least one run required");
  std::vector<UtilityRow> rows;
  for (std::size_t t : targets) {
    UtilityRow row{t, 0.0, 0.0, 0.0, 0.0};
    std::vector<double> ratios;
    for (std::size_t r = 0; r < runs; ++r) {
      const Scenario s = generate_scenario(t, derive_seed(master_seed, t, r));
      const ProblemInstance inst = ProblemInstance::from_scenario(s, default_bounds(t));
      const double classic = solve_classic(inst).utility;
      const double agent_u = allocate_with_agent(agent.params, agent.grid, inst).utility;
      row.classic_mean += classic;
      row.agent_mean += agent_u;
      ratios.push_back(agent_u / classic);
    }
    const double n = static_cast<double>(runs);
    row.classic_mean /= n;
    row.agent_mean /= n;
    for (double x : ratios) row.ratio_mean += x;
    row.ratio_mean /= n;
    if (runs > 1) {
      double ss = 0.0;
      for (double x : ratios) ss += (x - row.ratio_mean) * (x - row.ratio_mean);
      row.ratio_std = std::sqrt(ss / (n - 1.0));
    }
    rows.push_back(row);
  }
  return rows;
}

void write_utility_csv(std::ostream& out, std::span<const UtilityRow> rows) {
  csv(out) << "targets,classic_utility_mean,agent_utility_mean,ratio_mean,ratio_std\n";
  for (const auto& r : rows)
    out << r.targets << ',' << r.classic_mean << ',' << r.agent_mean << ',' << r.ratio_mean << ',' << r.ratio_std
        << '\n';
}

std::vector<TargetRuntimeRow> bench_runtime_by_targets(const AgentModel& agent, std::span<const std::size_t> targets,
                                                       std::size_t runs, std::uint64_t master_seed) {
  if (runs == 0) throw ArgumentError("bench_runtime: at least one run required");
  std::vector<TargetRuntimeRow> rows;
  for (std::size_t t : targets) {
    std::vector<double> classic, agent_t;
    for (std::size_t r = 0; r < runs; ++r) {
      const Scenario s = generate_scenario(t, derive_seed(master_seed, t, r));
      const ProblemInstance inst = ProblemInstance::from_scenario(s, default_bounds(t));
      auto t0 = clock_type::now();
      sink = sink + solve_classic(inst).allocation.size();
      classic.push_back(seconds_since(t0));
      t0 = clock_type::now();
      sink = sink + allocate_with_agent(agent.params, agent.grid, inst).allocation.size();
      agent_t.push_back(seconds_since(t0));
    }
    rows.push_back({t, median(classic), median(agent_t)});
  }
  return rows;
}

void write_target_runtime_csv(std::ostream& out, std::span<const TargetRuntimeRow> rows) {
  csv(out) << "targets,configs,classic_median_s,agent_median_s\n";
  for (const auto& r : rows)
    out << r.targets << ',' << 90 << ',' << r.classic_median_s << ',' << r.agent_median_s << '\n';
}

GridIndex grid_shape_for(std::size_t configs) {
  switch (configs) {
    case 90: return {6, 5, 3};
    case 180: return {12, 5, 3};
    case 450: return {15, 10, 3};
    case 900: return {20, 15, 3};
    case 1800: return {30, 20, 3};
    case 4500: return {50, 30, 3};
    default: throw ArgumentError("no grid mapping for " + std::to_string(configs) + " configurations");
  }
}

std::vector<std::size_t> default_config_sweep() { return {90, 180, 450, 900, 1800, 4500}; }

std::vector<ConfigRuntimeRow> bench_runtime_by_configs(const AgentModel& agent, std::span<const std::size_t> configs,
                                                       std::size_t runs, std::uint64_t master_seed) {
  if (runs == 0) throw ArgumentError("bench_runtime: at least one run required");
  std::vector<ConfigRuntimeRow> rows;
  for (std::size_t c : configs) {
    const GridIndex shape = grid_shape_for(c);
    const ConfigSpace grid = ConfigSpace::refined(shape.dwell, shape.duration, shape.power);
    // repetitions keep every timed region well above the clock resolution
    const std::size_t classic_reps = std::max<std::size_t>(2, 40000 / c);
    const std::size_t agent_reps = 200;
    std::vector<double> classic, agent_t;
    for (std::size_t r = 0; r < runs; ++r) {
      Rng rng(derive_seed(master_seed, c, r));
      const Target target = sample_target(rng, 0);
      const Task task{0, TaskType::Tracking, 0, grid};
      const ResourceBounds bounds = default_bounds(50);

      auto t0 = clock_type::now();
      for (std::size_t k = 0; k < classic_reps; ++k)
        sink = sink + upper_frontier(embed_task(task, target, bounds), 0).size();
      classic.push_back(seconds_since(t0) / static_cast<double>(classic_reps));

      const std::size_t current = base_config_index(grid, target, bounds);
      t0 = clock_type::now();
      for (std::size_t k = 0; k < agent_reps; ++k)
        sink = sink + next_config_index(agent.params, agent.grid, task, target, current);
      agent_t.push_back(seconds_since(t0) / static_cast<double>(agent_reps));
    }
    rows.push_back({c, median(classic), median(agent_t)});
  }
  return rows;
}

void write_config_runtime_csv(std::ostream& out, std::span<const ConfigRuntimeRow> rows) {
  csv(out) << "configs,dwell_points,duration_points,power_points,classic_joblist_median_s,agent_pass_median_s\n";
  for (const auto& r : rows) {
    const GridIndex g = grid_shape_for(r.configs);
    out << r.configs << ',' << g.dwell << ',' << g.duration << ',' << g.power << ',' << r.classic_median_s << ','
        << r.agent_median_s << '\n';
  }
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw ArgumentError("loglog_slope: need two or more paired samples");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

void write_complexity_model_csv(std::ostream& out, std::span<const std::size_t> targets, std::size_t layers,
                                std::size_t neurons) {
  csv(out) << "targets,growth,configs,classic_ops,agent_ops\n";
  const double l = static_cast<double>(layers);
  const double n2 = static_cast<double>(neurons) * static_cast<double>(neurons);
  for (const char* growth : {"constant", "linear", "quadratic"}) {
    for (std::size_t t : targets) {
      const double td = static_cast<double>(t);
      double c = 90.0;
      if (growth[0] == 'l') c = 90.0 * td / 20.0;
      if (growth[0] == 'q') c = 90.0 * (td / 20.0) * (td / 20.0);
      out << t << ',' << growth << ',' << c << ',' << td * c * std::log(c) << ',' << td * c * l * n2 << '\n';
    }
  }
}

std::vector<ConfigSpace> remark1_chain() {
  const std::vector<double> duration{2, 6, 10};
  const std::vector<double> power{1, 2, 4};
  return {ConfigSpace({100, 1100}, duration, power), ConfigSpace({100, 600, 1100}, duration, power),
          ConfigSpace({100, 350, 600, 850, 1100}, duration, power)};
}

Remark1Setup remark1_setup() { return {1, 0.0444, 5.0}; }

ProblemInstance remark1_instance(const Remark1Setup& setup, const ConfigSpace& grid) {
  return ProblemInstance::from_scenario(generate_scenario(4, setup.scenario_seed),
                                        ResourceBounds({setup.occupancy_bound, setup.power_bound}, {1.0, 1.0}), grid);
}

std::vector<Remark1Row> run_remark1(const Remark1Setup& setup) {
  std::vector<Remark1Row> rows;
  for (const ConfigSpace& grid : remark1_chain()) {
    const ProblemInstance inst = remark1_instance(setup, grid);
    rows.push_back({grid.size(), solve_classic(inst).utility, optimal_allocation(inst).utility});
  }
  return rows;
}

void write_remark1_csv(std::ostream& out, std::span<const Remark1Row> rows) {
  csv(out) << "configs,greedy_utility,optimal_utility\n";
  for (const auto& r : rows) out << r.configs << ',' << r.greedy_utility << ',' << r.optimal_utility << '\n';
}

bool exhibits_greedy_regression(std::span<const Remark1Row> rows) {
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (rows[j].greedy_utility < rows[i].greedy_utility && rows[j].optimal_utility >= rows[i].optimal_utility)
        return true;
  return false;
}

}  // namespace qram
