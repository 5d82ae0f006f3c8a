#ifndef QRAM_CONFIG_HPP
#define QRAM_CONFIG_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <vector>

namespace qram {

/// One operating point of a tracking task.
struct Configuration {
  double dwell_length_ms = 0.0;
  double transmit_duration_ms = 0.0;
  double transmit_power_kw = 0.0;

  // Lexicographic (dwell, duration, power); used for all deterministic tie-breaks.
  auto operator<=>(const Configuration&) const = default;
};

/// Grid indices of a configuration inside a ConfigSpace.
struct GridIndex {
  std::size_t dwell = 0;
  std::size_t duration = 0;
  std::size_t power = 0;

  auto operator<=>(const GridIndex&) const = default;
};

/// Discrete operational space: the product of three strictly increasing grids.
///
/// Configurations are numbered row-major over dwell x duration x power, which
/// is also the action numbering used by the learning agent.
class ConfigSpace {
 public:
  ConfigSpace(std::vector<double> dwell_grid, std::vector<double> tx_duration_grid,
              std::vector<double> tx_power_grid);

  /// Default grid: dwell {100..1100} ms, duration {2..10} ms, power {1,2,4} kW.
  static ConfigSpace default_grid();

  /// Uniform refinement of the default ranges with the given grid sizes;
  /// the power grid stays {1, 2, 4} when n_power == 3.
  static ConfigSpace refined(std::size_t n_dwell, std::size_t n_duration, std::size_t n_power);

  const std::vector<double>& dwell_grid() const { return dwell_; }
  const std::vector<double>& tx_duration_grid() const { return duration_; }
  const std::vector<double>& tx_power_grid() const { return power_; }

  std::size_t size() const { return dwell_.size() * duration_.size() * power_.size(); }

  Configuration at(std::size_t index) const;
  Configuration at(const GridIndex& g) const;
  GridIndex grid_index(std::size_t index) const;
  std::size_t flat_index(const GridIndex& g) const;

  /// Index of an exact grid member; throws ContractViolation when absent.
  std::size_t index_of(const Configuration& c) const;
  bool contains(const Configuration& c) const;

  /// Normalized coordinates grid-index / (grid-length - 1); 0 for single-value grids.
  std::array<double, 3> normalized(const GridIndex& g) const;

  /// Grid point whose normalized coordinates are nearest to `coords` (per axis,
  /// lower index on ties).
  GridIndex nearest(const std::array<double, 3>& coords) const;

  std::vector<Configuration> all() const;

  bool operator==(const ConfigSpace&) const = default;

 private:
  std::vector<double> dwell_;
  std::vector<double> duration_;
  std::vector<double> power_;
};

}  // namespace qram

#endif  // QRAM_CONFIG_HPP
