#include "qram/classic_solver.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <string>

#include "qram/errors.hpp"
#include "qram/quotient.hpp"

namespace qram {

JobList::JobList(int task_id, std::vector<JobPoint> points) : task_id_(task_id), points_(std::move(points)) {
  if (points_.empty()) throw ContractViolation("JobList: empty frontier");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i - 1].resource < points_[i].resource) || !(points_[i - 1].utility < points_[i].utility))
      throw ContractViolation("JobList: frontier not strictly increasing");
    if (i >= 2 && !(ratio(i - 1) < ratio(i - 2)))
      throw ContractViolation("JobList: marginal ratios not strictly decreasing");
  }
}

double JobList::ratio(std::size_t i) const {
  return utility_resource_quotient(points_[i + 1].utility - points_[i].utility,
                                   points_[i + 1].resource - points_[i].resource);
}

std::vector<JobPoint> embed_task(const Task& task, const Target& target, const ResourceBounds& bounds,
                                 std::size_t* evaluations) {
  const ConfigSpace& space = task.config_space;
  std::vector<JobPoint> points;
  points.reserve(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    JobPoint p;
    p.config = space.at(i);
    p.demand = resource_of(p.config);
    p.resource = compound_resource(p.demand, bounds);
    p.utility = task_utility(p.config, target);
    points.push_back(std::move(p));
  }
  if (evaluations != nullptr) *evaluations += space.size();
  return points;
}

PointProblem embed_instance(const ProblemInstance& instance) {
  PointProblem problem{{}, instance.bounds()};
  for (const auto& task : instance.tasks())
    problem.tasks.push_back({task.id, embed_task(task, instance.target_of(task), instance.bounds())});
  std::sort(problem.tasks.begin(), problem.tasks.end(),
            [](const EmbeddedTask& a, const EmbeddedTask& b) { return a.task_id < b.task_id; });
  return problem;
}

double orientation(const JobPoint& a, const JobPoint& b, const JobPoint& p) {
  return (b.resource - a.resource) * (p.utility - a.utility) -
         (b.utility - a.utility) * (p.resource - a.resource);
}

bool frontier_order(const JobPoint& a, const JobPoint& b) {
  if (a.resource != b.resource) return a.resource < b.resource;
  if (a.utility != b.utility) return a.utility > b.utility;
  return a.config < b.config;
}

JobList upper_frontier(std::vector<JobPoint> points, int task_id) {
  if (points.empty()) throw ArgumentError("upper_frontier: no points");
  std::sort(points.begin(), points.end(), frontier_order);

  std::vector<JobPoint> hull;
  hull.reserve(points.size());
  for (auto& p : points) {
    // exact duplicates: the first in sort order (smallest config) stands
    if (!hull.empty() && p.resource == hull.back().resource && p.utility == hull.back().utility) continue;
    // pop while the last hull point is not strictly above the chord to p
    while (hull.size() >= 2 && orientation(hull[hull.size() - 2], p, hull.back()) <= 0.0) hull.pop_back();
    hull.push_back(std::move(p));
  }

  std::vector<JobPoint> rising;
  rising.reserve(hull.size());
  for (auto& p : hull)
    if (rising.empty() || p.utility > rising.back().utility) rising.push_back(std::move(p));
  return JobList(task_id, std::move(rising));
}

namespace {

struct Candidate {
  double ratio;
  std::size_t slot;  // position in id-sorted order, so lower slot = lower id
  bool operator<(const Candidate& o) const {
    if (ratio != o.ratio) return ratio > o.ratio;
    return slot < o.slot;
  }
};

// Usage of the current assignment with task `slot` optionally replaced.
std::vector<double> usage_of(const std::vector<const ResourceVector*>& current, std::size_t k,
                             std::size_t slot = static_cast<std::size_t>(-1),
                             const ResourceVector* replacement = nullptr) {
  std::vector<double> usage(k, 0.0);
  for (std::size_t i = 0; i < current.size(); ++i) {
    const ResourceVector* rv = i == slot ? replacement : current[i];
    if (rv == nullptr) continue;
    if (rv->size() != k) throw ContractViolation("resource vector length does not match bounds");
    for (std::size_t j = 0; j < k; ++j) usage[j] += (*rv)[j];
  }
  return usage;
}

}  // namespace

double sum_utilities(const std::map<int, double>& utilities) {
  double u = 0.0;
  for (const auto& [id, value] : utilities) u += value;
  return u;
}

Solution greedy_allocate(const std::vector<JobList>& lists_in, const ResourceBounds& bounds) {
  std::vector<const JobList*> lists;
  for (const auto& l : lists_in) lists.push_back(&l);
  std::sort(lists.begin(), lists.end(),
            [](const JobList* a, const JobList* b) { return a->task_id() < b->task_id(); });
  for (std::size_t i = 1; i < lists.size(); ++i)
    if (lists[i - 1]->task_id() == lists[i]->task_id())
      throw ContractViolation("greedy_allocate: duplicate task id");

  const std::size_t n = lists.size();
  const std::size_t k = bounds.size();
  std::vector<std::size_t> position(n, 0);
  std::vector<bool> active(n, true);
  std::vector<const ResourceVector*> current(n);
  for (std::size_t i = 0; i < n; ++i) current[i] = &(*lists[i])[0].demand;

  Solution sol;
  for (std::size_t i = n; i-- > 0 && !within_bounds(usage_of(current, k), bounds);) {
    active[i] = false;
    current[i] = nullptr;
    sol.dropped.push_back(lists[i]->task_id());
  }

  std::set<Candidate> queue;
  for (std::size_t i = 0; i < n; ++i)
    if (active[i] && lists[i]->size() > 1) queue.insert({lists[i]->ratio(0), i});

  while (!queue.empty()) {
    const Candidate best = *queue.begin();
    queue.erase(queue.begin());
    const std::size_t i = best.slot;
    const JobList& list = *lists[i];
    const JobPoint& from = list[position[i]];
    const JobPoint& to = list[position[i] + 1];
    UpgradeStep step{list.task_id(), from.config, to.config, best.ratio, false};
    if (within_bounds(usage_of(current, k, i, &to.demand), bounds)) {
      step.accepted = true;
      ++position[i];
      current[i] = &to.demand;
      if (position[i] + 1 < list.size()) queue.insert({list.ratio(position[i]), i});
    }
    sol.trace.push_back(step);
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!active[i]) continue;
    const JobPoint& p = (*lists[i])[position[i]];
    sol.allocation[lists[i]->task_id()] = p.config;
    sol.task_utilities[lists[i]->task_id()] = p.utility;
  }
  sol.utility = sum_utilities(sol.task_utilities);
  sol.usage = usage_of(current, k);
  return sol;
}

std::vector<JobList> job_lists(const PointProblem& problem) {
  std::vector<JobList> lists;
  lists.reserve(problem.tasks.size());
  for (const auto& t : problem.tasks) lists.push_back(upper_frontier(t.points, t.task_id));
  return lists;
}

Solution solve_classic(const ProblemInstance& instance, ClassicTiming* timing) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  PointProblem problem = embed_instance(instance);
  const auto t1 = clock::now();
  std::vector<JobList> lists = job_lists(problem);
  const auto t2 = clock::now();
  Solution sol = greedy_allocate(lists, instance.bounds());
  const auto t3 = clock::now();
  if (timing != nullptr) {
    timing->embed_s = std::chrono::duration<double>(t1 - t0).count();
    timing->hull_s = std::chrono::duration<double>(t2 - t1).count();
    timing->optimize_s = std::chrono::duration<double>(t3 - t2).count();
  }
  return sol;
}

}  // namespace qram
