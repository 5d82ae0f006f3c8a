#include "qram/brute_force.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qram/errors.hpp"

namespace qram {

double state_count(const PointProblem& problem) {
  double states = 1.0;
  for (const auto& t : problem.tasks) states *= static_cast<double>(t.points.size() + 1);
  return states;
}

namespace {

constexpr long kDropped = -1;

class Enumerator {
 public:
  explicit Enumerator(const PointProblem& problem)
      : problem_(problem),
        k_(problem.bounds.size()),
        n_(problem.tasks.size()),
        usage_((n_ + 1) * k_, 0.0),
        utility_(n_ + 1, 0.0),
        choice_(n_, kDropped),
        best_choice_(n_, kDropped) {
    for (const auto& t : problem.tasks)
      for (const auto& p : t.points)
        if (p.demand.size() != k_) throw ContractViolation("optimal_allocation: demand length mismatch");
  }

  void run() { visit(0); }
  const std::vector<long>& best_choice() const { return best_choice_; }

 private:
  void visit(std::size_t depth) {
    if (depth == n_) {
      if (!found_ || utility_[n_] > best_utility_) {
        found_ = true;
        best_utility_ = utility_[n_];
        best_choice_ = choice_;
      }
      return;
    }
    const double* base = &usage_[depth * k_];
    double* next = &usage_[(depth + 1) * k_];

    choice_[depth] = kDropped;
    std::copy(base, base + k_, next);
    utility_[depth + 1] = utility_[depth];
    visit(depth + 1);

    const auto& points = problem_.tasks[depth].points;
    for (std::size_t o = 0; o < points.size(); ++o) {
      bool ok = true;
      for (std::size_t j = 0; j < k_; ++j) {
        next[j] = base[j] + points[o].demand[j];
        // demands are non-negative, so an exceeded partial sum stays exceeded
        ok = ok && next[j] <= problem_.bounds.bounds()[j];
      }
      if (!ok) continue;
      choice_[depth] = static_cast<long>(o);
      utility_[depth + 1] = utility_[depth] + points[o].utility;
      visit(depth + 1);
    }
  }

  const PointProblem& problem_;
  std::size_t k_;
  std::size_t n_;
  std::vector<double> usage_;
  std::vector<double> utility_;
  std::vector<long> choice_;
  std::vector<long> best_choice_;
  bool found_ = false;
  double best_utility_ = 0.0;
};

Solution assemble(const PointProblem& problem, const std::vector<long>& choice) {
  Solution sol;
  sol.usage.assign(problem.bounds.size(), 0.0);
  for (std::size_t i = 0; i < problem.tasks.size(); ++i) {
    if (choice[i] == kDropped) continue;
    const auto& task = problem.tasks[i];
    const JobPoint& p = task.points[static_cast<std::size_t>(choice[i])];
    sol.allocation[task.task_id] = p.config;
    sol.task_utilities[task.task_id] = p.utility;
    for (std::size_t j = 0; j < sol.usage.size(); ++j) sol.usage[j] += p.demand[j];
  }
  sol.utility = sum_utilities(sol.task_utilities);
  return sol;
}

void check_sorted(const PointProblem& problem) {
  for (std::size_t i = 1; i < problem.tasks.size(); ++i)
    if (!(problem.tasks[i - 1].task_id < problem.tasks[i].task_id))
      throw ContractViolation("point problem tasks must be in strictly ascending id order");
}

}  // namespace

Solution optimal_allocation(const PointProblem& problem, double state_cap) {
  check_sorted(problem);
  const double states = state_count(problem);
  if (states > state_cap)
    throw CapacityError("optimal_allocation: " + std::to_string(states) + " states exceed cap " +
                            std::to_string(state_cap),
                        states);
  Enumerator e(problem);
  e.run();
  return assemble(problem, e.best_choice());
}

Solution optimal_allocation(const ProblemInstance& instance, const std::optional<ConfigRestriction>& restriction,
                            double state_cap) {
  PointProblem problem{{}, instance.bounds()};
  const auto& tasks = instance.tasks();
  if (restriction && restriction->size() != tasks.size())
    throw ArgumentError("optimal_allocation: restriction needs one index list per task");
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    std::vector<JobPoint> all = embed_task(tasks[i], instance.target_of(tasks[i]), instance.bounds());
    if (!restriction) {
      problem.tasks.push_back({tasks[i].id, std::move(all)});
      continue;
    }
    EmbeddedTask t{tasks[i].id, {}};
    for (std::size_t idx : (*restriction)[i]) {
      if (idx >= all.size()) throw ArgumentError("optimal_allocation: restricted index out of range");
      t.points.push_back(all[idx]);
    }
    problem.tasks.push_back(std::move(t));
  }
  std::sort(problem.tasks.begin(), problem.tasks.end(),
            [](const EmbeddedTask& a, const EmbeddedTask& b) { return a.task_id < b.task_id; });
  return optimal_allocation(problem, state_cap);
}

PointProblem compound_only(const PointProblem& problem) {
  double budget = 0.0;
  for (double w : problem.bounds.compound_weights()) budget += w;
  PointProblem out{{}, ResourceBounds({budget}, {1.0})};
  for (const auto& t : problem.tasks) {
    EmbeddedTask e{t.task_id, {}};
    for (const auto& p : t.points) {
      JobPoint q = p;
      q.demand = ResourceVector{{p.resource}};
      q.resource = p.resource / budget;
      e.points.push_back(std::move(q));
    }
    out.tasks.push_back(std::move(e));
  }
  return out;
}

Solution optimal_allocation_dp(const PointProblem& problem, double step) {
  check_sorted(problem);
  if (problem.bounds.size() != 1)
    throw UnsupportedError("optimal_allocation_dp: only single-resource problems are supported");
  if (!(step > 0.0) || !std::isfinite(step)) throw ArgumentError("optimal_allocation_dp: step must be positive");

  const double budget_units = std::floor(problem.bounds.bounds()[0] / step);
  if (budget_units > 5e7) throw CapacityError("optimal_allocation_dp: resource grid too fine", budget_units);
  const auto B = static_cast<std::size_t>(budget_units);
  const std::size_t n = problem.tasks.size();

  // dp[b]: best utility of the tasks seen so far using at most b units
  std::vector<double> dp(B + 1, 0.0), next(B + 1);
  std::vector<long> choice(n * (B + 1), kDropped);
  std::vector<std::vector<std::size_t>> units(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& points = problem.tasks[i].points;
    units[i].resize(points.size());
    for (std::size_t o = 0; o < points.size(); ++o) {
      const double q = std::ceil(points[o].demand[0] / step);
      units[i][o] = q > budget_units ? B + 1 : static_cast<std::size_t>(q);
    }
    for (std::size_t b = 0; b <= B; ++b) {
      double best = dp[b];
      long pick = kDropped;
      for (std::size_t o = 0; o < points.size(); ++o) {
        if (units[i][o] > b) continue;
        const double u = dp[b - units[i][o]] + points[o].utility;
        if (u > best) {
          best = u;
          pick = static_cast<long>(o);
        }
      }
      next[b] = best;
      choice[i * (B + 1) + b] = pick;
    }
    dp.swap(next);
  }

  std::vector<long> picks(n, kDropped);
  std::size_t b = B;
  for (std::size_t i = n; i-- > 0;) {
    picks[i] = choice[i * (B + 1) + b];
    if (picks[i] != kDropped) b -= units[i][static_cast<std::size_t>(picks[i])];
  }
  return assemble(problem, picks);
}

}  // namespace qram
