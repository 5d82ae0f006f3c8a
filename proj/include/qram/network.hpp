#ifndef QRAM_NETWORK_HPP
#define QRAM_NETWORK_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qram/random.hpp"
#include "qram/rl_env.hpp"

namespace qram {

/// Fully connected layer y = W x + b, W stored row-major (out x in).
struct Dense {
  std::size_t in = 0;
  std::size_t out = 0;
  std::vector<double> weights;
  std::vector<double> bias;

  Dense() = default;
  Dense(std::size_t in_dim, std::size_t out_dim);

  std::size_t parameter_count() const { return weights.size() + bias.size(); }
  void forward(std::span<const double> x, std::span<double> y) const;
  bool operator==(const Dense&) const = default;
};

/// Split-input actor-critic network.
///
///   situational (5) -> 100 -> 100 --+
///                                     +-> concat (200) -> 100 -+-> policy logits (|A|)
///   configuration (3) -> 100 -------+                          +-> value (1)
///
/// Every hidden layer uses ReLU; the two heads are linear.
struct AgentParams {
  Dense situational_0;
  Dense situational_1;
  Dense config_0;
  Dense trunk;
  Dense policy_head;
  Dense value_head;

  static AgentParams zeros(std::size_t n_actions, std::size_t hidden = 100);
  /// Glorot-uniform weights in +-sqrt(6 / (fan_in + fan_out)), zero biases.
  static AgentParams glorot(std::size_t n_actions, std::uint64_t seed, std::size_t hidden = 100);

  std::size_t n_actions() const { return policy_head.out; }
  std::size_t hidden() const { return trunk.out; }
  std::size_t parameter_count() const;

  /// Layers in a fixed order (the serialization and flattening order).
  std::vector<Dense*> layers();
  std::vector<const Dense*> layers() const;
  static const std::vector<std::string>& layer_names();

  /// Flat copy of all parameters, layer by layer, weights before bias.
  std::vector<double> flatten() const;
  void unflatten(std::span<const double> flat);

  /// Same shapes, all zero.
  AgentParams zeros_like() const;
  bool operator==(const AgentParams&) const = default;
};

/// Intermediate activations kept for backpropagation.
struct ForwardCache {
  std::vector<double> situational_in, s0, s1, config_in, c0, concat, t0;
  std::vector<double> logits;
  double value = 0.0;
};

struct ForwardOutput {
  std::vector<double> logits;
  double value = 0.0;
};

ForwardOutput forward(const AgentParams& params, const State& state);
void forward(const AgentParams& params, const State& state, ForwardCache& cache);

/// Accumulates d(loss)/d(params) into `grad` given upstream gradients for the
/// logits and the value output.
void backward(const AgentParams& params, const ForwardCache& cache, std::span<const double> dlogits,
              double dvalue, AgentParams& grad);

/// Numerically stable softmax.
std::vector<double> softmax(std::span<const double> logits);

/// Draws from softmax(logits) by inverse CDF on one uniform variate.
std::size_t sample_action(std::span<const double> logits, Rng& rng);

/// argmax, lowest index on ties.
std::size_t greedy_action(std::span<const double> logits);

}  // namespace qram

#endif  // QRAM_NETWORK_HPP
