#include "qram/config.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qram/errors.hpp"

namespace qram {

namespace {

void check_grid(const std::vector<double>& grid, const char* name) {
  if (grid.empty()) throw ArgumentError(std::string("ConfigSpace: empty ") + name + " grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i]) || grid[i] <= 0.0)
      throw ArgumentError(std::string("ConfigSpace: non-positive value in ") + name + " grid");
    if (i > 0 && !(grid[i - 1] < grid[i]))
      throw ArgumentError(std::string("ConfigSpace: ") + name + " grid not strictly increasing");
  }
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n == 0) throw ArgumentError("ConfigSpace::refined: zero grid size");
  if (n == 1) return {lo};
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  out.back() = hi;
  return out;
}

std::size_t find_exact(const std::vector<double>& grid, double v) {
  auto it = std::lower_bound(grid.begin(), grid.end(), v);
  if (it == grid.end() || *it != v) return grid.size();
  return static_cast<std::size_t>(it - grid.begin());
}

double norm_coord(std::size_t i, std::size_t n) {
  return n <= 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
}

std::size_t nearest_coord(double x, std::size_t n) {
  if (n <= 1) return 0;
  const double scaled = std::clamp(x, 0.0, 1.0) * static_cast<double>(n - 1);
  std::size_t lo = static_cast<std::size_t>(std::floor(scaled));
  if (lo >= n - 1) return n - 1;
  return (scaled - static_cast<double>(lo)) > 0.5 ? lo + 1 : lo;
}

}  // namespace

ConfigSpace::ConfigSpace(std::vector<double> dwell_grid, std::vector<double> tx_duration_grid,
                         std::vector<double> tx_power_grid)
    : dwell_(std::move(dwell_grid)),
      duration_(std::move(tx_duration_grid)),
      power_(std::move(tx_power_grid)) {
  check_grid(dwell_, "dwell");
  check_grid(duration_, "transmit duration");
  check_grid(power_, "transmit power");
  // every dwell must contain every transmission
  if (!(duration_.back() < dwell_.front()))
    throw ArgumentError("ConfigSpace: transmit duration must be shorter than every dwell length");
}

ConfigSpace ConfigSpace::default_grid() {
  return ConfigSpace({100, 300, 500, 700, 900, 1100}, {2, 4, 6, 8, 10}, {1, 2, 4});
}

ConfigSpace ConfigSpace::refined(std::size_t n_dwell, std::size_t n_duration, std::size_t n_power) {
  std::vector<double> power = n_power == 3 ? std::vector<double>{1, 2, 4} : linspace(1, 4, n_power);
  return ConfigSpace(linspace(100, 1100, n_dwell), linspace(2, 10, n_duration), std::move(power));
}

GridIndex ConfigSpace::grid_index(std::size_t index) const {
  if (index >= size()) throw ContractViolation("ConfigSpace: configuration index out of range");
  GridIndex g;
  g.power = index % power_.size();
  index /= power_.size();
  g.duration = index % duration_.size();
  g.dwell = index / duration_.size();
  return g;
}

std::size_t ConfigSpace::flat_index(const GridIndex& g) const {
  if (g.dwell >= dwell_.size() || g.duration >= duration_.size() || g.power >= power_.size())
    throw ContractViolation("ConfigSpace: grid index out of range");
  return (g.dwell * duration_.size() + g.duration) * power_.size() + g.power;
}

Configuration ConfigSpace::at(const GridIndex& g) const {
  flat_index(g);  // range check
  return {dwell_[g.dwell], duration_[g.duration], power_[g.power]};
}

Configuration ConfigSpace::at(std::size_t index) const { return at(grid_index(index)); }

bool ConfigSpace::contains(const Configuration& c) const {
  return find_exact(dwell_, c.dwell_length_ms) < dwell_.size() &&
         find_exact(duration_, c.transmit_duration_ms) < duration_.size() &&
         find_exact(power_, c.transmit_power_kw) < power_.size();
}

std::size_t ConfigSpace::index_of(const Configuration& c) const {
  GridIndex g{find_exact(dwell_, c.dwell_length_ms), find_exact(duration_, c.transmit_duration_ms),
              find_exact(power_, c.transmit_power_kw)};
  if (g.dwell == dwell_.size() || g.duration == duration_.size() || g.power == power_.size())
    throw ContractViolation("ConfigSpace: configuration is not a grid member");
  return flat_index(g);
}

std::array<double, 3> ConfigSpace::normalized(const GridIndex& g) const {
  return {norm_coord(g.dwell, dwell_.size()), norm_coord(g.duration, duration_.size()),
          norm_coord(g.power, power_.size())};
}

GridIndex ConfigSpace::nearest(const std::array<double, 3>& coords) const {
  return {nearest_coord(coords[0], dwell_.size()), nearest_coord(coords[1], duration_.size()),
          nearest_coord(coords[2], power_.size())};
}

std::vector<Configuration> ConfigSpace::all() const {
  std::vector<Configuration> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i));
  return out;
}

}  // namespace qram
