// Scans seeded 4-target instances for the greedy refinement regression used by
// `qram demo remark1`: a larger configuration space giving strictly lower
// greedy utility while the brute-force optimum does not decrease.
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <vector>

#include "qram/bench.hpp"
#include "qram/brute_force.hpp"
#include "qram/classic_solver.hpp"

namespace {

using Chain = std::vector<qram::ConfigSpace>;

std::vector<std::pair<const char*, Chain>> families() {
  using qram::ConfigSpace;
  const std::vector<double> dwell{100, 300, 500, 700, 900, 1100};
  return {
      {"power", qram::remark1_chain()},
      {"dwell",
       {ConfigSpace({100, 1100}, {2, 6, 10}, {1, 2, 4}), ConfigSpace({100, 600, 1100}, {2, 6, 10}, {1, 2, 4}),
        ConfigSpace({100, 350, 600, 850, 1100}, {2, 6, 10}, {1, 2, 4})}},
      {"duration",
       {ConfigSpace(dwell, {2, 10}, {1, 4}), ConfigSpace(dwell, {2, 6, 10}, {1, 4}),
        ConfigSpace(dwell, {2, 4, 6, 8, 10}, {1, 4})}},
      {"power-2tx",
       {ConfigSpace(dwell, {2, 10}, {4}), ConfigSpace(dwell, {2, 10}, {1, 4}), ConfigSpace(dwell, {2, 10}, {1, 2.5, 4}),
        ConfigSpace(dwell, {2, 10}, {1, 1.75, 2.5, 3.25, 4}), ConfigSpace(dwell, {2, 10}, {1, 1.375, 1.75, 2.125, 2.5, 2.875, 3.25, 3.625, 4})}},
  };
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t max_seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 100;
  for (const auto& [name, chain] : families()) {
    std::size_t screened = 0;
    for (std::uint64_t seed = 1; seed <= max_seed; ++seed) {
      for (int step = 1; step <= 200; ++step) {
        for (double power : {5.0, 0.6, 0.4}) {
          const qram::Remark1Setup setup{seed, 0.0012 * step, power};
          std::vector<double> greedy;
          bool drops = false;
          for (const auto& grid : chain) {
            greedy.push_back(qram::solve_classic(qram::remark1_instance(setup, grid)).utility);
            drops = drops || (greedy.size() > 1 && greedy.back() < greedy[greedy.size() - 2]);
          }
          if (!drops) continue;
          ++screened;
          std::vector<double> optimum;
          for (const auto& grid : chain) optimum.push_back(qram::optimal_allocation(qram::remark1_instance(setup, grid)).utility);
          for (std::size_t i = 1; i < chain.size(); ++i) {
            if (greedy[i] < greedy[i - 1] && optimum[i] >= optimum[i - 1]) {
              std::cout << name << " seed " << seed << " occupancy_bound " << setup.occupancy_bound
                        << " power_bound " << power << "\n";
              for (std::size_t k = 0; k < chain.size(); ++k)
                std::cout << chain[k].size() << ',' << greedy[k] << ',' << optimum[k] << '\n';
              return 0;
            }
          }
        }
      }
    }
    std::cout << name << ": none (" << screened << " screened)\n";
  }
  return 1;
}
