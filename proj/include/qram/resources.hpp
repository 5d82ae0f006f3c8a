#ifndef QRAM_RESOURCES_HPP
#define QRAM_RESOURCES_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "qram/config.hpp"

namespace qram {

/// Resource requirement of one configuration, or a sum of them.
///
/// Physical instances use two components: radar time occupancy (duty fraction)
/// and average radiated power (kW). Synthetic instances may use any k.
struct ResourceVector {
  std::vector<double> components;

  std::size_t size() const { return components.size(); }
  double operator[](std::size_t j) const { return components[j]; }
  bool operator==(const ResourceVector&) const = default;
};

/// Global bounds R_1..R_k plus the weights of the compound (scalar) resource.
class ResourceBounds {
 public:
  ResourceBounds(std::vector<double> bounds, std::vector<double> compound_weights);

  const std::vector<double>& bounds() const { return bounds_; }
  const std::vector<double>& compound_weights() const { return weights_; }
  std::size_t size() const { return bounds_.size(); }

  bool operator==(const ResourceBounds&) const = default;

 private:
  std::vector<double> bounds_;
  std::vector<double> weights_;
};

inline constexpr std::size_t kPhysicalResources = 2;

/// (transmit_duration / dwell_length, transmit_power * transmit_duration / dwell_length)
ResourceVector resource_of(const Configuration& config);

/// Sum_j w_j * rv_j / R_j.
double compound_resource(std::span<const double> rv, const ResourceBounds& bounds);
inline double compound_resource(const ResourceVector& rv, const ResourceBounds& bounds) {
  return compound_resource(rv.components, bounds);
}

/// Componentwise usage <= bound (inclusive).
bool within_bounds(std::span<const double> usage, const ResourceBounds& bounds);

/// Bench defaults for n targets: occupancy min(1, 0.03 n), power 5 kW, weights (1, 1).
ResourceBounds default_bounds(std::size_t n_targets);

}  // namespace qram

#endif  // QRAM_RESOURCES_HPP
