// Shared fixtures and independent oracles for the unit and acceptance tests.
#ifndef QRAM_TESTS_HELPERS_HPP
#define QRAM_TESTS_HELPERS_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qram/classic_solver.hpp"
#include "qram/random.hpp"

namespace qram_test {

inline qram::JobPoint pt(double r, double u, int tag = 0) {
  qram::JobPoint p;
  p.resource = r;
  p.utility = u;
  // distinct configs keep tie-breaks well defined
  p.config = {1000.0 + tag, 1.0, 1.0};
  p.demand = qram::ResourceVector{{r}};
  return p;
}

// Exhaustive concave-majorant oracle, O(n^3): a point is kept when it is the
// first (smallest config, then input position) among its exact duplicates,
// lies strictly above every chord between two other points that straddle its
// resource, and has strictly more utility than every point of lower or equal
// resource.
inline std::vector<qram::JobPoint> frontier_oracle(const std::vector<qram::JobPoint>& pts) {
  std::vector<qram::JobPoint> keep;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = pts[i];
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      if (j == i) continue;
      const auto& q = pts[j];
      // dominated or duplicated by a point with no more resource
      if (q.resource <= p.resource && q.utility >= p.utility) {
        if (q.resource < p.resource || q.utility > p.utility) ok = false;
        // exact duplicate: smaller config wins, then earlier input position
        else if (q.config < p.config || (q.config == p.config && j < i)) ok = false;
      }
    }
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b = 0; b < n && ok; ++b) {
        const auto& pa = pts[a];
        const auto& pb = pts[b];
        if (!(pa.resource < p.resource && p.resource < pb.resource)) continue;
        // p must be strictly above the chord a-b
        const double cross = (pb.resource - pa.resource) * (p.utility - pa.utility) -
                             (pb.utility - pa.utility) * (p.resource - pa.resource);
        if (cross <= 0.0) ok = false;
      }
    }
    if (ok) keep.push_back(p);
  }
  std::sort(keep.begin(), keep.end(), [](const auto& x, const auto& y) { return x.resource < y.resource; });
  return keep;
}

// Random point cloud on a coarse integer lattice so that collinear triples and
// duplicates occur often.
inline std::vector<qram::JobPoint> lattice_points(qram::Rng& rng, std::size_t n, std::size_t span) {
  std::vector<qram::JobPoint> pts;
  for (std::size_t i = 0; i < n; ++i)
    pts.push_back(pt(static_cast<double>(rng.index(span)), static_cast<double>(rng.index(span)),
                     static_cast<int>(rng.index(4))));
  return pts;
}

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

inline CommandResult run_command(const std::string& cmd) {
  CommandResult r;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("qram_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace qram_test

#endif
