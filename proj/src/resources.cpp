#include "qram/resources.hpp"

#include <algorithm>
#include <cmath>

#include "qram/errors.hpp"

namespace qram {

ResourceBounds::ResourceBounds(std::vector<double> bounds, std::vector<double> compound_weights)
    : bounds_(std::move(bounds)), weights_(std::move(compound_weights)) {
  if (bounds_.empty()) throw ArgumentError("ResourceBounds: no resource types");
  if (bounds_.size() != weights_.size())
    throw ArgumentError("ResourceBounds: bounds and compound weights differ in length");
  bool any_weight = false;
  for (std::size_t j = 0; j < bounds_.size(); ++j) {
    if (!(bounds_[j] > 0.0) || !std::isfinite(bounds_[j]))
      throw ArgumentError("ResourceBounds: bounds must be positive and finite");
    if (!(weights_[j] >= 0.0) || !std::isfinite(weights_[j]))
      throw ArgumentError("ResourceBounds: compound weights must be non-negative");
    any_weight = any_weight || weights_[j] > 0.0;
  }
  if (!any_weight) throw ArgumentError("ResourceBounds: compound weights all zero");
}

ResourceVector resource_of(const Configuration& config) {
  const double occupancy = config.transmit_duration_ms / config.dwell_length_ms;
  return ResourceVector{{occupancy, config.transmit_power_kw * occupancy}};
}

double compound_resource(std::span<const double> rv, const ResourceBounds& bounds) {
  if (rv.size() != bounds.size())
    throw ContractViolation("compound_resource: resource vector length does not match bounds");
  double h = 0.0;
  for (std::size_t j = 0; j < rv.size(); ++j)
    h += bounds.compound_weights()[j] * rv[j] / bounds.bounds()[j];
  return h;
}

bool within_bounds(std::span<const double> usage, const ResourceBounds& bounds) {
  if (usage.size() != bounds.size())
    throw ContractViolation("within_bounds: usage length does not match bounds");
  for (std::size_t j = 0; j < usage.size(); ++j)
    if (!(usage[j] <= bounds.bounds()[j])) return false;
  return true;
}

ResourceBounds default_bounds(std::size_t n_targets) {
  const double occupancy = std::min(1.0, 0.03 * static_cast<double>(n_targets));
  return ResourceBounds({occupancy, 5.0}, {1.0, 1.0});
}

}  // namespace qram
