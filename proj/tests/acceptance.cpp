// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "gradcheck.hpp"
#include "helpers.hpp"
#include "qram/a2c.hpp"
#include "qram/agent_optimizer.hpp"
#include "qram/bench.hpp"
#include "qram/brute_force.hpp"
#include "qram/classic_solver.hpp"

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// Random sub-grid of the default ranges with at most 24 configurations.
qram::ConfigSpace small_grid(qram::Rng& rng) {
  auto pick = [&](std::vector<double> values, std::size_t n) {
    for (std::size_t i = values.size(); i > 1; --i) std::swap(values[i - 1], values[rng.index(i)]);
    values.resize(n);
    std::sort(values.begin(), values.end());
    return values;
  };
  const qram::ConfigSpace full = qram::ConfigSpace::default_grid();
  for (;;) {
    const std::size_t a = 1 + rng.index(4), b = 1 + rng.index(4), c = 1 + rng.index(3);
    if (a * b * c > 24) continue;
    return qram::ConfigSpace(pick(full.dwell_grid(), a), pick(full.tx_duration_grid(), b),
                             pick(full.tx_power_grid(), c));
  }
}

Outcome criterion1() {
  qram::Rng rng(101);
  std::size_t violations = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng.index(5);
    const qram::Scenario s = qram::generate_scenario(n, 5000 + i);
    const qram::ResourceBounds b({rng.uniform(0.005, 0.25), rng.uniform(0.05, 3.0)}, {1.0, 1.0});
    std::vector<qram::Task> tasks;
    for (std::size_t t = 0; t < n; ++t)
      tasks.push_back({static_cast<int>(t), qram::TaskType::Tracking, s.targets[t].id, small_grid(rng)});
    const qram::ProblemInstance inst(tasks, b, s);
    const double greedy = qram::solve_classic(inst).utility;
    const double best = qram::optimal_allocation(inst).utility;
    if (greedy > best) ++violations;
  }

  // Concave dyadic job lists with the budget set to a prefix of the greedy
  // upgrade order, so the trace ends with the resource exactly used up.
  std::size_t unequal = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng.index(5);
    qram::PointProblem problem{{}, qram::ResourceBounds({1.0}, {1.0})};
    struct Inc {
      double ratio;
      std::size_t task, step;
      double dr;
    };
    std::vector<Inc> incs;
    double base = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
      std::vector<qram::JobPoint> pts;
      // the base ratio u/r exceeds every later marginal ratio, so the chain stays
      // concave with the dropped option (0, 0) prepended
      double r = static_cast<double>(1 + rng.index(3));
      double u = r * (4.0 + static_cast<double>(rng.index(8)) / 8.0);
      base += r;
      pts.push_back(qram_test::pt(r, u, 0));
      const std::size_t len = 1 + rng.index(6);
      double ratio = 4.0;
      for (std::size_t k = 0; k < len; ++k) {
        ratio -= static_cast<double>(1 + rng.index(4)) / 16.0;
        if (ratio <= 0) break;
        const double dr = static_cast<double>(1 + rng.index(4));
        r += dr;
        u += dr * ratio;
        pts.push_back(qram_test::pt(r, u, static_cast<int>(k + 1)));
        incs.push_back({ratio, t, k, dr});
      }
      for (auto& p : pts) p.demand = qram::ResourceVector{{p.resource}};
      problem.tasks.push_back({static_cast<int>(t), pts});
    }
    std::sort(incs.begin(), incs.end(), [](const Inc& a, const Inc& b) {
      if (a.ratio != b.ratio) return a.ratio > b.ratio;
      if (a.task != b.task) return a.task < b.task;
      return a.step < b.step;
    });
    double budget = base;
    const std::size_t take = rng.index(incs.size() + 1);
    for (std::size_t k = 0; k < take; ++k) budget += incs[k].dr;
    // compound weight = budget makes the compound resource equal to the demand,
    // so tied marginal ratios stay exactly tied
    problem.bounds = qram::ResourceBounds({budget}, {budget});

    const auto lists = qram::job_lists(problem);
    bool on_frontier = true;
    for (std::size_t t = 0; t < n; ++t) on_frontier &= lists[t].size() == problem.tasks[t].points.size();
    const auto greedy = qram::greedy_allocate(lists, problem.bounds);
    const bool exhausted = greedy.usage[0] == budget;
    const auto best = qram::optimal_allocation(problem);
    if (!on_frontier || !exhausted || greedy.utility != best.utility) ++unequal;
  }
  return {violations == 0 && unequal == 0, "random: " + std::to_string(violations) +
                                               "/200 greedy above optimum; constructed: " + std::to_string(unequal) +
                                               "/200 not equal"};
}

Outcome criterion2() {
  const auto rows = qram::run_remark1(qram::remark1_setup());
  std::string d;
  for (const auto& r : rows)
    d += std::to_string(r.configs) + " configs greedy " + fmt(r.greedy_utility) + " optimum " +
         fmt(r.optimal_utility) + "; ";
  return {qram::exhibits_greedy_regression(rows), d};
}

Outcome criterion3() {
  qram::Rng rng(303);
  std::size_t mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng.index(40);
    std::vector<qram::JobPoint> pts;
    if (i % 2 == 0) {
      pts = qram_test::lattice_points(rng, n, 2 + rng.index(8));
    } else {
      for (std::size_t k = 0; k < n; ++k)
        pts.push_back(qram_test::pt(rng.uniform01(), rng.uniform01(), static_cast<int>(k)));
    }
    const auto want = qram_test::frontier_oracle(pts);
    const auto got = qram::upper_frontier(pts).points();
    if (got != want) ++mismatches;
  }
  return {mismatches == 0, std::to_string(mismatches) + "/1000 point sets differ from the exhaustive oracle"};
}

Outcome criterion4() {
  double worst = 0.0;
  std::size_t checked = 0, skipped = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto r = qram_test::check_a2c_gradient(seed, 2 + seed % 9, 3 + seed % 8);
    worst = std::max(worst, r.max_rel_error);
    checked += r.checked;
    skipped += r.skipped;
  }
  return {worst < 1e-4 && checked > 0, "max relative error " + fmt(worst) + " over " + std::to_string(checked) +
                                           " coordinates (" + std::to_string(skipped) + " kink crossings skipped)"};
}

const qram::AgentModel& desk_agent() {
  static const qram::AgentModel model = [] {
    qram::TrainConfig cfg;
    cfg.seed = 1;
    cfg.total_steps = 30000;
    return qram::AgentModel{qram::train(qram::EnvConfig{}, cfg).params, qram::ConfigSpace::default_grid()};
  }();
  return model;
}

Outcome criterion5() {
  const auto& m = desk_agent();
  const double quality =
      qram::agent_frontier_quality(m.params, m.grid, qram::EnvConfig{}.bounds, 500, 12345, 0.05);
  const std::vector<std::size_t> counts{20, 150};
  const auto rows = qram::bench_utility(m, counts, 20, 1);
  const bool pass = quality >= 0.80 && rows[0].ratio_mean >= 0.90 && rows[1].ratio_mean >= 0.85;
  return {pass, "frontier quality " + fmt(quality) + ", utility ratio " + fmt(rows[0].ratio_mean) +
                    " at 20 targets, " + fmt(rows[1].ratio_mean) + " at 150 targets"};
}

Outcome criterion6() {
  const auto& m = desk_agent();
  const auto configs = qram::default_config_sweep();
  const auto rows = qram::bench_runtime_by_configs(m, configs, 5, 1);
  std::vector<double> c, classic, agent;
  for (const auto& r : rows) {
    c.push_back(static_cast<double>(r.configs));
    classic.push_back(r.classic_median_s);
    agent.push_back(r.agent_median_s);
  }
  const double slope = qram::loglog_slope(c, classic);
  const double spread = *std::max_element(agent.begin(), agent.end()) / *std::min_element(agent.begin(), agent.end());
  return {slope >= 1.0 && spread < 2.0, "classic log-log slope " + fmt(slope) + ", agent time spread " + fmt(spread) + "x"};
}

Outcome criterion7() {
  std::size_t mismatches = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const std::size_t n = 1 + i % 60;
    const auto inst = qram::ProblemInstance::from_scenario(qram::generate_scenario(n, 7000 + i), qram::default_bounds(n));
    qram::FrontierOracleProposer oracle(inst);
    const auto a = qram::allocate_with_proposer(inst, oracle);
    const auto c = qram::solve_classic(inst);
    if (a.utility != c.utility || a.allocation != c.allocation) ++mismatches;
  }
  return {mismatches == 0, std::to_string(mismatches) + "/100 instances differ from the classic solver"};
}

std::string strip_timing_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  j.erase("timing");
  return j.dump();
}

// Keeps the leading non-timing columns of a runtime CSV.
std::string strip_timing_csv(const std::string& text, std::size_t keep) {
  std::stringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    std::size_t at = 0;
    for (std::size_t k = 0; k < keep && at != std::string::npos; ++k) at = line.find(',', at + 1);
    out += line.substr(0, at) + '\n';
  }
  return out;
}

Outcome criterion8() {
  const auto dir = qram_test::scratch_dir("acceptance_determinism");
  const std::string cli = QRAM_CLI_PATH;
  std::vector<std::string> failures;
  struct Artifact {
    std::string name;
    std::function<std::string(const std::string&)> normalize;
  };
  const auto raw = [](const std::string& s) { return s; };
  const std::vector<Artifact> artifacts{
      {"scenario.json", raw},
      {"weights.bin", raw},
      {"curve.csv", raw},
      {"classic.json", strip_timing_json},
      {"agent.json", strip_timing_json},
      {"brute.json", strip_timing_json},
      {"dp.json", strip_timing_json},
      {"utility.csv", raw},
      {"runtime.csv", [](const std::string& s) { return strip_timing_csv(s, 2); }},
      {"configs.csv", [](const std::string& s) { return strip_timing_csv(s, 4); }},
      {"model.csv", raw},
      {"remark1.csv", raw},
  };
  for (int run = 0; run < 2; ++run) {
    const std::string d = (dir / ("run" + std::to_string(run))).string();
    std::filesystem::create_directories(d);
    const std::vector<std::string> commands{
        "gen --targets 3 --seed 11 --out " + d + "/scenario.json",
        "train --steps 1500 --seed 2 --out " + d + "/weights.bin --curve " + d + "/curve.csv --log-every 50",
        "solve --scenario " + d + "/scenario.json --method classic --out " + d + "/classic.json",
        "solve --scenario " + d + "/scenario.json --method agent --weights " + d + "/weights.bin --out " + d +
            "/agent.json",
        "solve --scenario " + d + "/scenario.json --method brute --out " + d + "/brute.json",
        "solve --scenario " + d + "/scenario.json --method dp --out " + d + "/dp.json",
        "bench utility --targets 10..30 --step 10 --runs 3 --seed 5 --weights " + d + "/weights.bin --out " + d +
            "/utility.csv",
        "bench runtime --targets 10..20 --step 10 --runs 2 --weights " + d + "/weights.bin --out " + d +
            "/runtime.csv",
        "bench runtime --mode by-configs --configs 90,180 --runs 1 --weights " + d + "/weights.bin --out " + d +
            "/configs.csv",
        "bench model --targets 20..60 --step 20 --out " + d + "/model.csv",
        "demo remark1 --out " + d + "/remark1.csv",
    };
    for (const auto& c : commands) {
      const auto r = qram_test::run_command(cli + " " + c);
      if (r.exit_code != 0) return {false, "command failed (" + std::to_string(r.exit_code) + "): " + c};
    }
  }
  for (const auto& a : artifacts) {
    const std::string x = qram_test::slurp(dir / "run0" / a.name), y = qram_test::slurp(dir / "run1" / a.name);
    if (x.empty() || a.normalize(x) != a.normalize(y)) failures.push_back(a.name);
  }
  std::string d = std::to_string(artifacts.size() - failures.size()) + "/" + std::to_string(artifacts.size()) +
                  " artifacts identical across two runs";
  for (const auto& f : failures) d += "; differs: " + f;
  return {failures.empty(), d};
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                      criterion5, criterion6, criterion7, criterion8};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " (" << fmt(s) << " s) " << o.detail
              << std::endl;
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
