#ifndef QRAM_RL_ENV_HPP
#define QRAM_RL_ENV_HPP

#include <array>
#include <cstddef>
#include <cstdint>

#include "qram/config.hpp"
#include "qram/perf_model.hpp"
#include "qram/random.hpp"
#include "qram/resources.hpp"

namespace qram {

inline constexpr std::size_t kSituationalFeatures = kTargetTypes + 2;  // one-hot type, range, speed
inline constexpr std::size_t kConfigFeatures = 3;

/// Agent input: situational part (type one-hot, range / 150 km, speed / 1000 m/s)
/// and configuration part (normalized grid indices). All features in [0, 1].
struct State {
  std::array<double, kSituationalFeatures> situational{};
  std::array<double, kConfigFeatures> config{};

  bool operator==(const State&) const = default;
};

struct StepResult {
  State next_state;
  double reward = 0.0;
  bool done = false;
};

struct EnvConfig {
  ConfigSpace grid = ConfigSpace::default_grid();
  // compound resource used for rewards; bench defaults at >= 34 targets
  ResourceBounds bounds = default_bounds(50);
  std::size_t episode_len = 3;
  double reward_cap = 50.0;
  // Actions that lower the compound resource are scored -|quotient|. The
  // allocator never accepts them, and left unpenalized a step back down a
  // concave frontier always outscores the next step up.
  bool penalize_resource_decrease = true;
};

State encode_state(const Target& target, const ConfigSpace& grid, std::size_t config_index);

/// Minimum compound resource configuration; ties go to higher utility, then
/// the lexicographically smaller configuration.
std::size_t base_config_index(const ConfigSpace& grid, const Target& target, const ResourceBounds& bounds);

/// (u(c) - u(c_in)) / (r(c) - r(c_in)) with r the compound resource; see
/// utility_resource_quotient for the degenerate cases.
double raw_quotient(const Configuration& c_in, const Configuration& c, const Target& target,
                    const ResourceBounds& bounds);

/// clamp(q, -cap, cap) / cap
double capped_reward(double quotient, double cap);

/// One-task episodic environment. An episode freezes a random target, starts at
/// the base configuration and lasts `episode_len` steps; each action replaces
/// the configuration.
class Environment {
 public:
  Environment(EnvConfig config, std::uint64_t seed);

  State reset();
  /// Reset onto a given target (evaluation helper).
  State reset(const Target& target);
  StepResult step(std::size_t action);

  const EnvConfig& config() const { return config_; }
  const Target& target() const { return target_; }
  std::size_t config_index() const { return config_index_; }
  std::size_t steps_taken() const { return steps_; }
  bool done() const { return steps_ >= config_.episode_len; }
  std::size_t action_count() const { return config_.grid.size(); }

 private:
  EnvConfig config_;
  Rng rng_;
  Target target_;
  std::size_t config_index_ = 0;
  std::size_t steps_ = 0;
  bool started_ = false;
};

}  // namespace qram

#endif  // QRAM_RL_ENV_HPP
