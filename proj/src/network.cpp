#include "qram/network.hpp"

#include <algorithm>
#include <cmath>

#include "qram/errors.hpp"

namespace qram {

Dense::Dense(std::size_t in_dim, std::size_t out_dim)
    : in(in_dim), out(out_dim), weights(in_dim * out_dim, 0.0), bias(out_dim, 0.0) {}

void Dense::forward(std::span<const double> x, std::span<double> y) const {
  if (x.size() != in || y.size() != out) throw ContractViolation("Dense::forward: shape mismatch");
  for (std::size_t o = 0; o < out; ++o) {
    const double* w = &weights[o * in];
    double acc = bias[o];
    for (std::size_t i = 0; i < in; ++i) acc += w[i] * x[i];
    y[o] = acc;
  }
}

AgentParams AgentParams::zeros(std::size_t n_actions, std::size_t hidden) {
  if (n_actions == 0 || hidden == 0) throw ArgumentError("AgentParams: empty layer");
  AgentParams p;
  p.situational_0 = Dense(kSituationalFeatures, hidden);
  p.situational_1 = Dense(hidden, hidden);
  p.config_0 = Dense(kConfigFeatures, hidden);
  p.trunk = Dense(2 * hidden, hidden);
  p.policy_head = Dense(hidden, n_actions);
  p.value_head = Dense(hidden, 1);
  return p;
}

AgentParams AgentParams::glorot(std::size_t n_actions, std::uint64_t seed, std::size_t hidden) {
  AgentParams p = zeros(n_actions, hidden);
  Rng rng(seed);
  for (Dense* layer : p.layers()) {
    const double limit = std::sqrt(6.0 / static_cast<double>(layer->in + layer->out));
    for (double& w : layer->weights) w = rng.uniform(-limit, limit);
  }
  return p;
}

std::vector<Dense*> AgentParams::layers() {
  return {&situational_0, &situational_1, &config_0, &trunk, &policy_head, &value_head};
}

std::vector<const Dense*> AgentParams::layers() const {
  return {&situational_0, &situational_1, &config_0, &trunk, &policy_head, &value_head};
}

const std::vector<std::string>& AgentParams::layer_names() {
  static const std::vector<std::string> names{"situational_0", "situational_1", "config_0",
                                              "trunk",         "policy_head",   "value_head"};
  return names;
}

std::size_t AgentParams::parameter_count() const {
  std::size_t n = 0;
  for (const Dense* l : layers()) n += l->parameter_count();
  return n;
}

std::vector<double> AgentParams::flatten() const {
  std::vector<double> flat;
  flat.reserve(parameter_count());
  for (const Dense* l : layers()) {
    flat.insert(flat.end(), l->weights.begin(), l->weights.end());
    flat.insert(flat.end(), l->bias.begin(), l->bias.end());
  }
  return flat;
}

void AgentParams::unflatten(std::span<const double> flat) {
  if (flat.size() != parameter_count()) throw ContractViolation("AgentParams::unflatten: size mismatch");
  std::size_t at = 0;
  for (Dense* l : layers()) {
    std::copy_n(flat.begin() + static_cast<std::ptrdiff_t>(at), l->weights.size(), l->weights.begin());
    at += l->weights.size();
    std::copy_n(flat.begin() + static_cast<std::ptrdiff_t>(at), l->bias.size(), l->bias.begin());
    at += l->bias.size();
  }
}

AgentParams AgentParams::zeros_like() const { return zeros(n_actions(), hidden()); }

namespace {

void relu(std::vector<double>& v) {
  for (double& x : v) x = x > 0.0 ? x : 0.0;
}

// dx += W^T dy ; dW += dy x^T ; db += dy
void dense_backward(const Dense& layer, std::span<const double> x, std::span<const double> dy, Dense& grad,
                    std::span<double> dx) {
  for (std::size_t o = 0; o < layer.out; ++o) {
    const double g = dy[o];
    if (g == 0.0) continue;
    grad.bias[o] += g;
    double* gw = &grad.weights[o * layer.in];
    const double* w = &layer.weights[o * layer.in];
    for (std::size_t i = 0; i < layer.in; ++i) {
      gw[i] += g * x[i];
      if (!dx.empty()) dx[i] += g * w[i];
    }
  }
}

// gradient through ReLU given the post-activation values
void relu_backward(std::span<const double> activated, std::span<double> d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!(activated[i] > 0.0)) d[i] = 0.0;
}

}  // namespace

void forward(const AgentParams& params, const State& state, ForwardCache& c) {
  const std::size_t h = params.hidden();
  if (params.situational_0.in != state.situational.size() || params.config_0.in != state.config.size())
    throw ContractViolation("forward: state does not match network input");
  c.situational_in.assign(state.situational.begin(), state.situational.end());
  c.config_in.assign(state.config.begin(), state.config.end());

  c.s0.resize(h);
  params.situational_0.forward(c.situational_in, c.s0);
  relu(c.s0);
  c.s1.resize(h);
  params.situational_1.forward(c.s0, c.s1);
  relu(c.s1);
  c.c0.resize(h);
  params.config_0.forward(c.config_in, c.c0);
  relu(c.c0);

  c.concat.resize(2 * h);
  std::copy(c.s1.begin(), c.s1.end(), c.concat.begin());
  std::copy(c.c0.begin(), c.c0.end(), c.concat.begin() + static_cast<std::ptrdiff_t>(h));
  c.t0.resize(h);
  params.trunk.forward(c.concat, c.t0);
  relu(c.t0);

  c.logits.resize(params.n_actions());
  params.policy_head.forward(c.t0, c.logits);
  double v = 0.0;
  params.value_head.forward(c.t0, std::span<double>(&v, 1));
  c.value = v;
}

ForwardOutput forward(const AgentParams& params, const State& state) {
  ForwardCache cache;
  forward(params, state, cache);
  return {std::move(cache.logits), cache.value};
}

void backward(const AgentParams& params, const ForwardCache& c, std::span<const double> dlogits, double dvalue,
              AgentParams& grad) {
  const std::size_t h = params.hidden();
  if (dlogits.size() != params.n_actions()) throw ContractViolation("backward: logits gradient size mismatch");

  std::vector<double> dt0(h, 0.0);
  dense_backward(params.policy_head, c.t0, dlogits, grad.policy_head, dt0);
  dense_backward(params.value_head, c.t0, std::span<const double>(&dvalue, 1), grad.value_head, dt0);
  relu_backward(c.t0, dt0);

  std::vector<double> dconcat(2 * h, 0.0);
  dense_backward(params.trunk, c.concat, dt0, grad.trunk, dconcat);
  std::span<double> ds1(dconcat.data(), h);
  std::span<double> dc0(dconcat.data() + h, h);
  relu_backward(c.s1, ds1);
  relu_backward(c.c0, dc0);

  dense_backward(params.config_0, c.config_in, dc0, grad.config_0, {});
  std::vector<double> ds0(h, 0.0);
  dense_backward(params.situational_1, c.s0, ds1, grad.situational_1, ds0);
  relu_backward(c.s0, ds0);
  dense_backward(params.situational_0, c.situational_in, ds0, grad.situational_0, {});
}

std::vector<double> softmax(std::span<const double> logits) {
  std::vector<double> p(logits.size());
  if (logits.empty()) return p;
  const double m = *std::max_element(logits.begin(), logits.end());
  double z = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    p[i] = std::exp(logits[i] - m);
    z += p[i];
  }
  for (double& x : p) x /= z;
  return p;
}

std::size_t sample_action(std::span<const double> logits, Rng& rng) {
  if (logits.empty()) throw ContractViolation("sample_action: no actions");
  const std::vector<double> p = softmax(logits);
  const double u = rng.uniform01();
  double cum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    cum += p[i];
    if (u < cum) return i;
  }
  // rounding left u above the final cumulative sum: last action with mass
  for (std::size_t i = p.size(); i-- > 0;)
    if (p[i] > 0.0) return i;
  return p.size() - 1;
}

std::size_t greedy_action(std::span<const double> logits) {
  if (logits.empty()) throw ContractViolation("greedy_action: no actions");
  return static_cast<std::size_t>(std::max_element(logits.begin(), logits.end()) - logits.begin());
}

}  // namespace qram
