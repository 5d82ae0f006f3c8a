#include "qram/rl_env.hpp"

#include <algorithm>
#include <cmath>

#include "qram/errors.hpp"
#include "qram/quotient.hpp"

namespace qram {

State encode_state(const Target& target, const ConfigSpace& grid, std::size_t config_index) {
  State s;
  s.situational[static_cast<std::size_t>(target.ttype)] = 1.0;
  s.situational[kTargetTypes] = std::clamp(target.range_km / model::kMaxRangeKm, 0.0, 1.0);
  s.situational[kTargetTypes + 1] = std::clamp(target.speed_mps / model::kMaxSpeedMps, 0.0, 1.0);
  s.config = grid.normalized(grid.grid_index(config_index));
  return s;
}

std::size_t base_config_index(const ConfigSpace& grid, const Target& target, const ResourceBounds& bounds) {
  std::size_t best = 0;
  double best_r = compound_resource(resource_of(grid.at(0)), bounds);
  double best_u = -1.0;  // computed lazily, only when resources tie
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const Configuration c = grid.at(i);
    const double r = compound_resource(resource_of(c), bounds);
    if (r < best_r) {
      best = i;
      best_r = r;
      best_u = -1.0;
    } else if (r == best_r) {
      if (best_u < 0.0) best_u = task_utility(grid.at(best), target);
      const double u = task_utility(c, target);
      // grid order is lexicographic, so an equal utility keeps the earlier index
      if (u > best_u) {
        best = i;
        best_u = u;
      }
    }
  }
  return best;
}

double raw_quotient(const Configuration& c_in, const Configuration& c, const Target& target,
                    const ResourceBounds& bounds) {
  const double du = task_utility(c, target) - task_utility(c_in, target);
  const double dr = compound_resource(resource_of(c), bounds) - compound_resource(resource_of(c_in), bounds);
  return utility_resource_quotient(du, dr);
}

double capped_reward(double quotient, double cap) { return std::clamp(quotient, -cap, cap) / cap; }

Environment::Environment(EnvConfig config, std::uint64_t seed) : config_(std::move(config)), rng_(seed) {
  if (config_.episode_len == 0) throw ArgumentError("Environment: episode length must be positive");
  if (!(config_.reward_cap > 0.0)) throw ArgumentError("Environment: reward cap must be positive");
}

State Environment::reset() { return reset(sample_target(rng_, 0)); }

State Environment::reset(const Target& target) {
  target_ = target;
  config_index_ = base_config_index(config_.grid, target_, config_.bounds);
  steps_ = 0;
  started_ = true;
  return encode_state(target_, config_.grid, config_index_);
}

StepResult Environment::step(std::size_t action) {
  if (!started_ || done()) throw ContractViolation("Environment::step: episode is not active");
  if (action >= config_.grid.size()) throw ContractViolation("Environment::step: action out of range");
  const Configuration& from = config_.grid.at(config_index_);
  const Configuration& to = config_.grid.at(action);
  double q = raw_quotient(from, to, target_, config_.bounds);
  if (config_.penalize_resource_decrease &&
      compound_resource(resource_of(to), config_.bounds) - compound_resource(resource_of(from), config_.bounds) <=
          -kResourceEpsilon)
    q = -std::abs(q);
  config_index_ = action;
  ++steps_;
  return {encode_state(target_, config_.grid, config_index_), capped_reward(q, config_.reward_cap), done()};
}

}  // namespace qram
