#include "qram/a2c.hpp"

#include <cmath>
#include <sstream>

#include "qram/errors.hpp"

namespace qram {

void TrainConfig::validate() const {
  if (!(discount >= 0.0 && discount < 1.0)) throw ArgumentError("TrainConfig: discount must lie in [0, 1)");
  if (episode_len == 0) throw ArgumentError("TrainConfig: episode length must be positive");
  if (!(learning_rate > 0.0)) throw ArgumentError("TrainConfig: learning rate must be positive");
  if (!(rmsprop_decay >= 0.0 && rmsprop_decay < 1.0)) throw ArgumentError("TrainConfig: decay must lie in [0, 1)");
  if (!(rmsprop_epsilon > 0.0)) throw ArgumentError("TrainConfig: epsilon must be positive");
  if (!(entropy_coeff >= 0.0) || !(value_coeff >= 0.0)) throw ArgumentError("TrainConfig: negative loss weight");
  if (hidden == 0) throw ArgumentError("TrainConfig: hidden width must be positive");
  if (log_every == 0) throw ArgumentError("TrainConfig: log interval must be positive");
}

OptimizerState OptimizerState::for_params(const AgentParams& params) {
  return {std::vector<double>(params.parameter_count(), 0.0)};
}

std::vector<double> discounted_returns(std::span<const double> rewards, double discount) {
  std::vector<double> g(rewards.size());
  double acc = 0.0;
  for (std::size_t t = rewards.size(); t-- > 0;) {
    acc = rewards[t] + discount * acc;
    g[t] = acc;
  }
  return g;
}

A2CMetrics a2c_loss(const AgentParams& params, std::span<const Transition> trajectory,
                    std::span<const double> returns, std::span<const double> advantages, const TrainConfig& cfg,
                    AgentParams* grad) {
  if (returns.size() != trajectory.size() || advantages.size() != trajectory.size())
    throw ContractViolation("a2c_loss: returns/advantages do not match trajectory");
  A2CMetrics m;
  ForwardCache cache;
  std::vector<double> dlogits;
  for (std::size_t t = 0; t < trajectory.size(); ++t) {
    const Transition& tr = trajectory[t];
    forward(params, tr.state, cache);
    if (tr.action >= cache.logits.size()) throw ContractViolation("a2c_loss: action out of range");
    const std::vector<double> p = softmax(cache.logits);

    double entropy = 0.0;
    for (double pi : p)
      if (pi > 0.0) entropy -= pi * std::log(pi);
    const double logp = std::log(p[tr.action]);
    const double err = returns[t] - cache.value;

    m.policy_loss += -advantages[t] * logp;
    m.value_loss += err * err;
    m.entropy += entropy;

    if (grad != nullptr) {
      dlogits.assign(p.size(), 0.0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        const double onehot = i == tr.action ? 1.0 : 0.0;
        const double logpi = p[i] > 0.0 ? std::log(p[i]) : 0.0;
        // d(-A log p_a)/dz_i = A (p_i - 1[i=a]);  d(-c_e H)/dz_i = c_e p_i (log p_i + H)
        dlogits[i] = advantages[t] * (p[i] - onehot) + cfg.entropy_coeff * p[i] * (logpi + entropy);
      }
      const double dvalue = -2.0 * cfg.value_coeff * err;
      backward(params, cache, dlogits, dvalue, *grad);
    }
  }
  m.loss = m.policy_loss + cfg.value_coeff * m.value_loss - cfg.entropy_coeff * m.entropy;
  return m;
}

void rmsprop_step(AgentParams& params, OptimizerState& opt, const AgentParams& grad, const TrainConfig& cfg) {
  if (opt.mean_square.size() != params.parameter_count())
    throw ContractViolation("rmsprop_step: optimizer state does not match parameters");
  auto layers = params.layers();
  auto glayers = grad.layers();
  std::size_t at = 0;
  auto update = [&](std::vector<double>& theta, const std::vector<double>& g) {
    for (std::size_t i = 0; i < theta.size(); ++i, ++at) {
      double& ms = opt.mean_square[at];
      ms = cfg.rmsprop_decay * ms + (1.0 - cfg.rmsprop_decay) * g[i] * g[i];
      theta[i] -= cfg.learning_rate * g[i] / std::sqrt(ms + cfg.rmsprop_epsilon);
    }
  };
  for (std::size_t l = 0; l < layers.size(); ++l) {
    update(layers[l]->weights, glayers[l]->weights);
    update(layers[l]->bias, glayers[l]->bias);
  }
}

namespace {

std::string dump(std::span<const Transition> trajectory, const A2CMetrics& m) {
  std::ostringstream os;
  os << "non-finite A2C loss (policy " << m.policy_loss << ", value " << m.value_loss << ", entropy "
     << m.entropy << "); trajectory:";
  for (const auto& tr : trajectory) {
    os << " [action " << tr.action << " reward " << tr.reward << " state";
    for (double x : tr.state.situational) os << ' ' << x;
    for (double x : tr.state.config) os << ' ' << x;
    os << ']';
  }
  return os.str();
}

bool all_finite(const std::vector<double>& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace

A2CMetrics a2c_update(AgentParams& params, OptimizerState& opt, std::span<const Transition> trajectory,
                      const TrainConfig& cfg) {
  if (trajectory.size() != cfg.episode_len)
    throw ContractViolation("a2c_update: trajectory length differs from episode length");
  std::vector<double> rewards;
  for (const auto& tr : trajectory) rewards.push_back(tr.reward);
  const std::vector<double> returns = discounted_returns(rewards, cfg.discount);
  std::vector<double> advantages(trajectory.size());
  for (std::size_t t = 0; t < trajectory.size(); ++t)
    advantages[t] = returns[t] - forward(params, trajectory[t].state).value;

  AgentParams grad = params.zeros_like();
  const A2CMetrics m = a2c_loss(params, trajectory, returns, advantages, cfg, &grad);
  if (!std::isfinite(m.loss)) throw TrainingError(dump(trajectory, m));
  rmsprop_step(params, opt, grad, cfg);
  for (const Dense* l : params.layers())
    if (!all_finite(l->weights) || !all_finite(l->bias))
      throw TrainingError("non-finite parameters after update; " + dump(trajectory, m));
  return m;
}

TrainResult train(const EnvConfig& env_config, const TrainConfig& cfg) {
  cfg.validate();
  if (env_config.episode_len != cfg.episode_len)
    throw ArgumentError("train: environment and training episode lengths differ");
  // independent streams for initialization, environment and action sampling
  TrainResult result{AgentParams::glorot(env_config.grid.size(), cfg.seed, cfg.hidden), {}, {}};
  Environment env(env_config, cfg.seed ^ 0x9E3779B97F4A7C15ULL);
  Rng policy_rng(cfg.seed ^ 0xD1B54A32D192ED03ULL);
  OptimizerState opt = OptimizerState::for_params(result.params);

  const std::size_t episodes = cfg.total_steps / cfg.episode_len;
  std::vector<Transition> trajectory;
  double window_reward = 0.0;
  double window_loss = 0.0;
  std::size_t window = 0;
  for (std::size_t e = 0; e < episodes; ++e) {
    trajectory.clear();
    State s = env.reset();
    double episode_reward = 0.0;
    while (!env.done()) {
      const ForwardOutput out = forward(result.params, s);
      const std::size_t a = sample_action(out.logits, policy_rng);
      StepResult step = env.step(a);
      trajectory.push_back({s, a, step.reward});
      episode_reward += step.reward;
      s = step.next_state;
    }
    const A2CMetrics m = a2c_update(result.params, opt, trajectory, cfg);
    result.episode_rewards.push_back(episode_reward);
    window_reward += episode_reward;
    window_loss += m.loss;
    if (++window == cfg.log_every) {
      result.curve.push_back({(e + 1) * cfg.episode_len, window_reward / static_cast<double>(window),
                              window_loss / static_cast<double>(window)});
      window_reward = window_loss = 0.0;
      window = 0;
    }
  }
  return result;
}

}  // namespace qram
