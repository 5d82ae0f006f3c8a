#include <gtest/gtest.h>

#include <chrono>

#include "helpers.hpp"
#include "qram/brute_force.hpp"
#include "qram/errors.hpp"

using qram::EmbeddedTask;
using qram::JobPoint;
using qram::PointProblem;

namespace {

JobPoint option(std::vector<double> demand, double utility, int tag) {
  JobPoint p = qram_test::pt(0, utility, tag);
  p.demand = qram::ResourceVector{std::move(demand)};
  return p;
}

// Random problem with dyadic numbers so every sum is exact.
PointProblem dyadic_problem(qram::Rng& rng, std::size_t tasks, std::size_t k, std::size_t max_options) {
  std::vector<double> bounds(k), weights(k, 1.0);
  for (auto& b : bounds) b = 0.25 * static_cast<double>(4 + rng.index(40));
  PointProblem p{{}, qram::ResourceBounds(bounds, weights)};
  for (std::size_t t = 0; t < tasks; ++t) {
    EmbeddedTask e{static_cast<int>(2 * t + 1), {}};
    const std::size_t n = 1 + rng.index(max_options);
    for (std::size_t o = 0; o < n; ++o) {
      std::vector<double> d(k);
      for (auto& x : d) x = 0.25 * static_cast<double>(rng.index(24));
      e.points.push_back(option(d, 0.125 * static_cast<double>(rng.index(32)), static_cast<int>(o)));
    }
    p.tasks.push_back(std::move(e));
  }
  return p;
}

// Odometer enumeration, choices -1 (dropped) .. n-1 per task, first maximum wins.
std::vector<long> oracle_choice(const PointProblem& p, double* utility) {
  const std::size_t n = p.tasks.size();
  std::vector<long> c(n, -1), best = c;
  double best_u = -1.0;
  for (;;) {
    std::vector<double> usage(p.bounds.size(), 0.0);
    double u = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i] < 0) continue;
      const auto& pt = p.tasks[i].points[static_cast<std::size_t>(c[i])];
      for (std::size_t j = 0; j < usage.size(); ++j) usage[j] += pt.demand[j];
      u += pt.utility;
    }
    bool ok = true;
    for (std::size_t j = 0; j < usage.size(); ++j) ok = ok && usage[j] <= p.bounds.bounds()[j];
    if (ok && u > best_u) {
      best_u = u;
      best = c;
    }
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (c[i] + 1 < static_cast<long>(p.tasks[i].points.size())) {
        ++c[i];
        break;
      }
      c[i] = -1;
      if (i == 0) {
        *utility = best_u;
        return best;
      }
    }
    if (n == 0) {
      *utility = best_u;
      return best;
    }
  }
}

}  // namespace

TEST(BruteForce, StateCount) {
  qram::Rng rng(1);
  PointProblem p = dyadic_problem(rng, 3, 1, 5);
  double expect = 1.0;
  for (const auto& t : p.tasks) expect *= static_cast<double>(t.points.size() + 1);
  EXPECT_EQ(qram::state_count(p), expect);
}

TEST(BruteForce, SingleTaskArgmax) {
  const auto s = qram::generate_scenario(1, 8);
  const auto inst = qram::ProblemInstance::from_scenario(s, qram::ResourceBounds({0.01, 0.02}, {1, 1}));
  const auto sol = qram::optimal_allocation(inst);
  double best = 0.0;
  for (const auto& c : qram::ConfigSpace::default_grid().all()) {
    const auto rv = qram::resource_of(c);
    if (rv[0] <= 0.01 && rv[1] <= 0.02) best = std::max(best, qram::task_utility(c, s.targets[0]));
  }
  EXPECT_EQ(sol.utility, best);
  EXPECT_TRUE(qram::is_feasible(sol.allocation, inst));
}

TEST(BruteForce, BoundsBelowEveryDemandGiveEmptyAllocation) {
  const auto inst = qram::ProblemInstance::from_scenario(qram::generate_scenario(3, 2),
                                                         qram::ResourceBounds({1e-6, 100}, {1, 1}));
  const auto sol = qram::optimal_allocation(inst);
  EXPECT_TRUE(sol.allocation.empty());
  EXPECT_EQ(sol.utility, 0.0);
}

TEST(BruteForce, CapacityError) {
  const auto inst = qram::ProblemInstance::from_scenario(qram::generate_scenario(5, 2), qram::default_bounds(5));
  try {
    qram::optimal_allocation(inst);
    FAIL() << "expected a capacity error";
  } catch (const qram::CapacityError& e) {
    EXPECT_EQ(e.states(), std::pow(91.0, 5));
  }
  EXPECT_THROW(qram::optimal_allocation(inst, std::nullopt, 1000), qram::CapacityError);
}

TEST(BruteForce, MatchesOdometerOracle) {
  qram::Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const PointProblem p = dyadic_problem(rng, 1 + rng.index(4), 1 + rng.index(3), 6);
    double u = 0.0;
    const auto choice = oracle_choice(p, &u);
    const auto sol = qram::optimal_allocation(p);
    EXPECT_EQ(sol.utility, u);
    for (std::size_t i = 0; i < p.tasks.size(); ++i) {
      const auto it = sol.allocation.find(p.tasks[i].task_id);
      if (choice[i] < 0) {
        EXPECT_EQ(it, sol.allocation.end());
      } else {
        ASSERT_NE(it, sol.allocation.end());
        EXPECT_EQ(it->second, p.tasks[i].points[static_cast<std::size_t>(choice[i])].config);
      }
    }
    for (std::size_t j = 0; j < p.bounds.size(); ++j) EXPECT_LE(sol.usage[j], p.bounds.bounds()[j]);
  }
}

TEST(BruteForce, RejectsUnsortedTasks) {
  qram::Rng rng(3);
  PointProblem p = dyadic_problem(rng, 2, 1, 2);
  std::swap(p.tasks[0], p.tasks[1]);
  EXPECT_THROW(qram::optimal_allocation(p), qram::ContractViolation);
}

TEST(BruteForce, RestrictionSupersetNeverWorse) {
  const auto inst = qram::ProblemInstance::from_scenario(qram::generate_scenario(3, 11),
                                                         qram::ResourceBounds({0.03, 0.06}, {1, 1}));
  qram::ConfigRestriction small(3), large(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t c = 0; c < 90; c += 3) small[i].push_back(c);
    for (std::size_t c = 0; c < 90; ++c)
      if (c % 3 != 2) large[i].push_back(c);
  }
  const double a = qram::optimal_allocation(inst, small).utility;
  const double b = qram::optimal_allocation(inst, large).utility;
  const double c = qram::optimal_allocation(inst).utility;
  EXPECT_LE(a, b);
  EXPECT_LE(b, c);
  EXPECT_THROW(qram::optimal_allocation(inst, qram::ConfigRestriction(2)), qram::ArgumentError);
  EXPECT_THROW(qram::optimal_allocation(inst, qram::ConfigRestriction{{90}, {0}, {0}}), qram::ArgumentError);
}

TEST(Dp, MatchesExhaustiveOnGridAlignedProblems) {
  qram::Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const PointProblem p = dyadic_problem(rng, 1 + rng.index(5), 1, 6);
    const auto dp = qram::optimal_allocation_dp(p, 0.25);
    const auto exact = qram::optimal_allocation(p);
    EXPECT_EQ(dp.utility, exact.utility);
    EXPECT_LE(dp.usage[0], p.bounds.bounds()[0]);
  }
}

TEST(Dp, HalvingStepNeverDecreases) {
  const auto inst = qram::ProblemInstance::from_scenario(qram::generate_scenario(6, 4), qram::default_bounds(6));
  const PointProblem single = qram::compound_only(qram::embed_instance(inst));
  double prev = -1.0;
  for (double step = 0.1; step > 1e-4; step /= 2) {
    const auto sol = qram::optimal_allocation_dp(single, step);
    EXPECT_GE(sol.utility, prev);
    EXPECT_LE(sol.usage[0], single.bounds.bounds()[0]);
    prev = sol.utility;
  }
}

TEST(Dp, NeverAboveExhaustive) {
  const auto inst = qram::ProblemInstance::from_scenario(qram::generate_scenario(3, 6),
                                                         qram::ResourceBounds({0.04, 0.1}, {1, 1}));
  const PointProblem single = qram::compound_only(qram::embed_instance(inst));
  const double exact = qram::optimal_allocation(single).utility;
  for (double step : {0.01, 0.001, 0.0001}) EXPECT_LE(qram::optimal_allocation_dp(single, step).utility, exact);
  EXPECT_NEAR(qram::optimal_allocation_dp(single, 1e-5).utility, exact, 0.05 * exact);
}

TEST(Dp, Errors) {
  qram::Rng rng(9);
  const PointProblem two = dyadic_problem(rng, 2, 2, 3);
  EXPECT_THROW(qram::optimal_allocation_dp(two, 0.25), qram::UnsupportedError);
  const PointProblem one = dyadic_problem(rng, 2, 1, 3);
  EXPECT_THROW(qram::optimal_allocation_dp(one, 0.0), qram::ArgumentError);
  EXPECT_THROW(qram::optimal_allocation_dp(one, 1e-12), qram::CapacityError);
}

TEST(Dp, CompoundOnlyView) {
  const auto inst = qram::ProblemInstance::from_scenario(qram::generate_scenario(2, 1),
                                                         qram::ResourceBounds({0.5, 2}, {1, 3}));
  const PointProblem full = qram::embed_instance(inst);
  const PointProblem single = qram::compound_only(full);
  EXPECT_EQ(single.bounds.bounds(), (std::vector<double>{4.0}));
  for (std::size_t t = 0; t < 2; ++t) {
    for (std::size_t o = 0; o < 90; ++o) {
      const auto& p = full.tasks[t].points[o];
      EXPECT_EQ(single.tasks[t].points[o].demand, qram::ResourceVector{{p.resource}});
      EXPECT_EQ(single.tasks[t].points[o].utility, p.utility);
    }
  }
  // the compound view relaxes the vector bounds
  EXPECT_LE(qram::optimal_allocation(full).utility, qram::optimal_allocation(single).utility);
}

TEST(Dp, TenTasksDefaultStep) {
  const auto inst = qram::ProblemInstance::from_scenario(qram::generate_scenario(10, 3), qram::default_bounds(10));
  const PointProblem single = qram::compound_only(qram::embed_instance(inst));
  const auto t0 = std::chrono::steady_clock::now();
  const auto sol = qram::optimal_allocation_dp(single, single.bounds.bounds()[0] / 2000);
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  RecordProperty("dp_seconds", std::to_string(s));
  EXPECT_EQ(sol.allocation.size(), 10u);
  EXPECT_LE(sol.usage[0], single.bounds.bounds()[0]);
}
