#ifndef QRAM_A2C_HPP
#define QRAM_A2C_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qram/network.hpp"
#include "qram/rl_env.hpp"

namespace qram {

struct TrainConfig {
  double discount = 0.005;
  std::size_t episode_len = 3;
  double learning_rate = 7e-4;
  double rmsprop_decay = 0.99;
  double rmsprop_epsilon = 1e-5;
  double entropy_coeff = 0.01;
  double value_coeff = 0.5;
  std::size_t total_steps = 30000;
  std::uint64_t seed = 1;
  std::size_t hidden = 100;
  std::size_t log_every = 100;  // episodes per learning-curve row

  /// Throws ArgumentError on out-of-range values.
  void validate() const;
};

/// RMSprop running mean squares, one per parameter (flattened order).
struct OptimizerState {
  std::vector<double> mean_square;

  static OptimizerState for_params(const AgentParams& params);
};

struct Transition {
  State state;
  std::size_t action = 0;
  double reward = 0.0;
};

struct A2CMetrics {
  double loss = 0.0;
  double policy_loss = 0.0;
  double value_loss = 0.0;
  double entropy = 0.0;
};

/// G_t = r_t + discount * G_{t+1}, terminal after the last reward.
std::vector<double> discounted_returns(std::span<const double> rewards, double discount);

/// Loss with the advantages held constant:
///   -Sum A_t log pi(a_t|s_t) + value_coeff Sum (G_t - v_t)^2 - entropy_coeff Sum H(pi(.|s_t))
/// When `grad` is given, the analytic gradient is accumulated into it.
A2CMetrics a2c_loss(const AgentParams& params, std::span<const Transition> trajectory,
                    std::span<const double> returns, std::span<const double> advantages, const TrainConfig& cfg,
                    AgentParams* grad = nullptr);

/// ms <- decay ms + (1 - decay) g^2 ; theta <- theta - lr g / sqrt(ms + eps)
void rmsprop_step(AgentParams& params, OptimizerState& opt, const AgentParams& grad, const TrainConfig& cfg);

/// One A2C update from a full episode. Throws TrainingError when the loss or the
/// updated parameters are not finite.
A2CMetrics a2c_update(AgentParams& params, OptimizerState& opt, std::span<const Transition> trajectory,
                      const TrainConfig& cfg);

struct CurvePoint {
  std::size_t step = 0;        // environment steps so far
  double mean_reward = 0.0;    // mean episode reward over the logging window
  double mean_loss = 0.0;
};

struct TrainResult {
  AgentParams params;
  std::vector<CurvePoint> curve;
  std::vector<double> episode_rewards;  // summed reward per episode
};

/// Single-worker A2C: total_steps / episode_len episodes, one update per episode.
TrainResult train(const EnvConfig& env_config, const TrainConfig& cfg);

}  // namespace qram

#endif  // QRAM_A2C_HPP
