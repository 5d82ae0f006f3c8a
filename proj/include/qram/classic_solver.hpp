#ifndef QRAM_CLASSIC_SOLVER_HPP
#define QRAM_CLASSIC_SOLVER_HPP

#include <cstddef>
#include <vector>

#include "qram/config.hpp"
#include "qram/problem.hpp"
#include "qram/resources.hpp"
#include "qram/solution.hpp"

namespace qram {

/// A configuration embedded into resource-utility space.
struct JobPoint {
  Configuration config;
  double resource = 0.0;  // compound resource
  double utility = 0.0;
  ResourceVector demand;  // full resource vector, used for feasibility

  bool operator==(const JobPoint&) const = default;
};

/// Concave upper frontier of one task: resource and utility strictly
/// increasing, marginal ratios strictly decreasing. The constructor checks this.
class JobList {
 public:
  JobList(int task_id, std::vector<JobPoint> points);

  int task_id() const { return task_id_; }
  const std::vector<JobPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const JobPoint& operator[](std::size_t i) const { return points_[i]; }

  /// Marginal utility-to-resource ratio from point i to point i + 1.
  double ratio(std::size_t i) const;

 private:
  int task_id_;
  std::vector<JobPoint> points_;
};

/// All candidate points of one task, in configuration-index order.
struct EmbeddedTask {
  int task_id = 0;
  std::vector<JobPoint> points;
};

/// Solver input detached from the performance model. Tasks are kept in
/// ascending id order; synthetic instances may use any number of resources.
struct PointProblem {
  std::vector<EmbeddedTask> tasks;
  ResourceBounds bounds;
};

/// Evaluates every configuration of the task's grid. `evaluations`, when
/// given, is incremented once per utility evaluation.
std::vector<JobPoint> embed_task(const Task& task, const Target& target, const ResourceBounds& bounds,
                                 std::size_t* evaluations = nullptr);

PointProblem embed_instance(const ProblemInstance& instance);

/// Orientation of p relative to the directed line a -> b in (resource, utility)
/// space; positive when p lies above the line for a.resource < b.resource.
double orientation(const JobPoint& a, const JobPoint& b, const JobPoint& p);

/// Sort order used by the frontier: resource ascending, utility descending,
/// configuration ascending.
bool frontier_order(const JobPoint& a, const JobPoint& b);

/// Concave majorant (upper-left hull, rising part only) via monotone chain.
/// Throws ArgumentError on empty input.
JobList upper_frontier(std::vector<JobPoint> points, int task_id = 0);

/// Greedy marginal-utility allocation over job lists.
///
/// Every task starts at its first frontier point (tasks are dropped from the
/// highest id down while the bases alone are infeasible). The task with the
/// highest next ratio (lower id on ties) is upgraded one frontier point if the
/// full resource vector stays within bounds; otherwise it is skipped for good.
Solution greedy_allocate(const std::vector<JobList>& job_lists, const ResourceBounds& bounds);

struct ClassicTiming {
  double embed_s = 0.0;
  double hull_s = 0.0;
  double optimize_s = 0.0;
};

/// Embed, hull and greedy over a physical instance.
Solution solve_classic(const ProblemInstance& instance, ClassicTiming* timing = nullptr);

/// Job lists for every task of a point problem.
std::vector<JobList> job_lists(const PointProblem& problem);

/// Sum of per-task utilities in ascending id order (the order map iteration gives).
double sum_utilities(const std::map<int, double>& utilities);

}  // namespace qram

#endif  // QRAM_CLASSIC_SOLVER_HPP
