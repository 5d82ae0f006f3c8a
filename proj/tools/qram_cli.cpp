// qram: scenario generation, solving, training and benchmarks.
//
// Exit codes: 0 success, 2 usage/input error, 3 capacity error, 4 training error.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qram/a2c.hpp"
#include "qram/agent_optimizer.hpp"
#include "qram/bench.hpp"
#include "qram/brute_force.hpp"
#include "qram/classic_solver.hpp"
#include "qram/errors.hpp"
#include "qram/serialize.hpp"
#include "qram/weights_io.hpp"

namespace {

constexpr int kUsage = 2;
constexpr int kCapacity = 3;
constexpr int kTraining = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + item + "'");
    }
  }
  return out;
}

// "20..150" or "40"
std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoul(text);
      return {v, v};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("bad range '" + text + "' (expected A..B)");
  }
}

template <typename Writer>
void write_text(const std::string& path, Writer&& writer) {
  if (path.empty() || path == "-") {
    writer(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw qram::LoadError("cannot write " + path);
  writer(out);
}

qram::ProblemInstance load_instance(const std::string& path, const std::string& bounds_text,
                                    const std::string& weights_text) {
  const qram::json doc = qram::read_json_file(path);
  if (doc.contains("tasks")) {
    qram::ProblemInstance inst = qram::instance_from_json(doc);
    if (bounds_text.empty() && weights_text.empty()) return inst;
    qram::ResourceBounds b(bounds_text.empty() ? inst.bounds().bounds() : parse_list(bounds_text),
                           weights_text.empty() ? inst.bounds().compound_weights() : parse_list(weights_text));
    return qram::ProblemInstance(inst.tasks(), b, inst.scenario());
  }
  const qram::Scenario scenario = qram::scenario_from_json(doc);
  qram::ResourceBounds b = qram::default_bounds(scenario.targets.size());
  if (!bounds_text.empty() || !weights_text.empty())
    b = qram::ResourceBounds(bounds_text.empty() ? b.bounds() : parse_list(bounds_text),
                             weights_text.empty() ? b.compound_weights() : parse_list(weights_text));
  return qram::ProblemInstance::from_scenario(scenario, b);
}

struct SolveOptions {
  std::string scenario, method = "classic", weights, bounds, compound_weights, out;
  double step_fraction = 1.0 / 2000.0;
  double state_cap = qram::kDefaultStateCap;
};

int run_solve(const SolveOptions& o) {
  const qram::ProblemInstance inst = load_instance(o.scenario, o.bounds, o.compound_weights);
  qram::json timing;
  qram::Solution sol;
  const auto t0 = std::chrono::steady_clock::now();
  if (o.method == "classic") {
    qram::ClassicTiming t;
    sol = qram::solve_classic(inst, &t);
    timing = {{"embed_s", t.embed_s}, {"hull_s", t.hull_s}, {"optimize_s", t.optimize_s}};
  } else if (o.method == "agent") {
    if (o.weights.empty()) throw UsageError("--method agent requires --weights");
    const qram::AgentModel model = qram::load_weights(o.weights);
    qram::AgentTiming t;
    sol = qram::allocate_with_agent(model.params, model.grid, inst, {}, &t);
    timing = {{"agent_query_s", t.query_s}, {"optimize_s", t.optimize_s}};
  } else if (o.method == "brute") {
    sol = qram::optimal_allocation(inst, std::nullopt, o.state_cap);
  } else if (o.method == "dp") {
    const qram::PointProblem single = qram::compound_only(qram::embed_instance(inst));
    sol = qram::optimal_allocation_dp(single, single.bounds.bounds()[0] * o.step_fraction);
    // report usage in the physical resources
    sol.usage = qram::resource_usage(sol.allocation, inst);
  } else {
    throw UsageError("unknown method '" + o.method + "'");
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  timing["total_s"] = total;

  qram::json doc{{"format", qram::kJsonFormat}, {"method", o.method}};
  const qram::json body = qram::to_json(sol);
  for (auto& [key, value] : body.items()) doc[key] = value;
  doc["bounds"] = qram::to_json(inst.bounds());
  doc["feasible"] = qram::is_feasible(sol.allocation, inst);
  doc["timing"] = timing;
  write_text(o.out, [&](std::ostream& out) { out << doc.dump(2) << '\n'; });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Q-RAM radar resource management: classic and learned solvers"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random tracking scenario");
  std::size_t gen_targets = 0;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("--targets", gen_targets, "Number of targets")->required();
  gen->add_option("--seed", gen_seed, "Scenario seed");
  gen->add_option("--out", gen_out, "Output scenario JSON (stdout when omitted)");

  // solve
  auto* solve = app.add_subcommand("solve", "Solve a scenario or problem instance");
  SolveOptions so;
  solve->add_option("--scenario", so.scenario, "Scenario or instance JSON")->required();
  solve->add_option("--method", so.method, "classic | agent | brute | dp")
      ->check(CLI::IsMember({"classic", "agent", "brute", "dp"}));
  solve->add_option("--weights", so.weights, "Agent weight file (method agent)");
  solve->add_option("--bounds", so.bounds, "Resource bounds R1,R2 (occupancy, kW)");
  solve->add_option("--compound-weights", so.compound_weights, "Compound resource weights w1,w2");
  solve->add_option("--step", so.step_fraction, "DP resource step as a fraction of the compound budget");
  solve->add_option("--state-cap", so.state_cap, "Brute-force state cap");
  solve->add_option("--out", so.out, "Output result JSON (stdout when omitted)");

  // train
  auto* trainc = app.add_subcommand("train", "Train the actor-critic agent");
  qram::TrainConfig tc;
  std::string train_out, curve_out;
  trainc->add_option("--steps", tc.total_steps, "Environment steps");
  trainc->add_option("--seed", tc.seed, "Training seed");
  trainc->add_option("--out", train_out, "Weight file")->required();
  trainc->add_option("--curve", curve_out, "Learning-curve CSV");
  trainc->add_option("--lr", tc.learning_rate, "RMSprop learning rate");
  trainc->add_option("--decay", tc.rmsprop_decay, "RMSprop decay");
  trainc->add_option("--epsilon", tc.rmsprop_epsilon, "RMSprop epsilon");
  trainc->add_option("--entropy", tc.entropy_coeff, "Entropy bonus coefficient");
  trainc->add_option("--value-coeff", tc.value_coeff, "Value loss coefficient");
  trainc->add_option("--discount", tc.discount, "Discount factor");
  trainc->add_option("--hidden", tc.hidden, "Neurons per hidden layer");
  trainc->add_option("--log-every", tc.log_every, "Episodes per learning-curve row");

  // bench
  auto* bench = app.add_subcommand("bench", "Benchmarks (CSV output)");
  bench->require_subcommand(1);
  std::string b_targets = "20..150", b_weights, b_out, b_mode = "by-targets", b_configs;
  std::size_t b_step = 10, b_runs = 20;
  std::uint64_t b_seed = 1;
  auto* bu = bench->add_subcommand("utility", "Classic vs agent system utility by target count");
  auto* br = bench->add_subcommand("runtime", "Classic vs agent computation time");
  auto* bm = bench->add_subcommand("model", "Closed-form complexity table");
  for (auto* sub : {bu, br, bm}) {
    sub->add_option("--targets", b_targets, "Target range A..B");
    sub->add_option("--step", b_step, "Target count step");
    sub->add_option("--out", b_out, "Output CSV (stdout when omitted)");
  }
  for (auto* sub : {bu, br}) {
    sub->add_option("--runs", b_runs, "Seeded runs per row");
    sub->add_option("--weights", b_weights, "Agent weight file")->required();
    sub->add_option("--seed", b_seed, "Master seed");
  }
  br->add_option("--mode", b_mode, "by-targets | by-configs")->check(CLI::IsMember({"by-targets", "by-configs"}));
  br->add_option("--configs", b_configs, "Configuration counts for by-configs, comma separated");

  // demo
  auto* demo = app.add_subcommand("demo", "Stored demonstrations");
  demo->require_subcommand(1);
  auto* remark1 = demo->add_subcommand("remark1", "Greedy vs optimum under configuration refinement");
  std::string r1_out;
  remark1->add_option("--out", r1_out, "Output CSV (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) {
      const qram::Scenario s = qram::generate_scenario(gen_targets, gen_seed);
      write_text(gen_out, [&](std::ostream& out) { out << qram::to_json(s).dump(2) << '\n'; });
    } else if (*solve) {
      return run_solve(so);
    } else if (*trainc) {
      qram::EnvConfig env;
      env.episode_len = tc.episode_len;
      const qram::TrainResult r = qram::train(env, tc);
      qram::save_weights(train_out, r.params, env.grid);
      if (!curve_out.empty())
        write_text(curve_out, [&](std::ostream& out) {
          out << "step,mean_episode_reward,mean_loss\n";
          out.precision(12);
          for (const auto& p : r.curve) out << p.step << ',' << p.mean_reward << ',' << p.mean_loss << '\n';
        });
    } else if (*bench) {
      const auto [first, last] = parse_range(b_targets);
      const auto counts = qram::target_counts(first, last, b_step);
      if (*bm) {
        write_text(b_out, [&](std::ostream& out) { qram::write_complexity_model_csv(out, counts, 6, 100); });
        return 0;
      }
      const qram::AgentModel model = qram::load_weights(b_weights);
      if (*bu) {
        const auto rows = qram::bench_utility(model, counts, b_runs, b_seed);
        write_text(b_out, [&](std::ostream& out) { qram::write_utility_csv(out, rows); });
      } else if (b_mode == "by-targets") {
        const auto rows = qram::bench_runtime_by_targets(model, counts, b_runs, b_seed);
        write_text(b_out, [&](std::ostream& out) { qram::write_target_runtime_csv(out, rows); });
      } else {
        std::vector<std::size_t> configs = qram::default_config_sweep();
        if (!b_configs.empty()) {
          configs.clear();
          for (double c : parse_list(b_configs)) configs.push_back(static_cast<std::size_t>(c));
        }
        const auto rows = qram::bench_runtime_by_configs(model, configs, b_runs, b_seed);
        write_text(b_out, [&](std::ostream& out) { qram::write_config_runtime_csv(out, rows); });
      }
    } else if (*demo) {
      const auto rows = qram::run_remark1(qram::remark1_setup());
      write_text(r1_out, [&](std::ostream& out) { qram::write_remark1_csv(out, rows); });
    }
  } catch (const qram::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kCapacity;
  } catch (const qram::TrainingError& e) {
    std::cerr << "training error: " << e.what() << '\n';
    return kTraining;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const qram::ArgumentError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const qram::LoadError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
