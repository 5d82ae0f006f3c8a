#ifndef QRAM_PERF_MODEL_HPP
#define QRAM_PERF_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qram/config.hpp"
#include "qram/random.hpp"

namespace qram {

enum class TargetType { Helicopter, Fighter, Missile };

inline constexpr std::size_t kTargetTypes = 3;

std::string_view to_string(TargetType t);
std::optional<TargetType> parse_target_type(std::string_view s);

struct Target {
  int id = 0;
  TargetType ttype = TargetType::Helicopter;
  double range_km = 0.0;
  double speed_mps = 0.0;

  bool operator==(const Target&) const = default;
};

struct Scenario {
  std::vector<Target> targets;
  std::uint64_t seed = 0;

  const Target* find(int id) const;
  bool operator==(const Scenario&) const = default;
};

struct QualityValue {
  double track_error_m = 0.0;
};

// Model constants. None of these come from measured radar data; they are
// chosen so the model is analytically checkable and trades resource for
// utility with diminishing returns.
namespace model {
inline constexpr double kMinRangeKm = 5.0;
inline constexpr double kMaxRangeKm = 150.0;
inline constexpr double kMaxSpeedMps = 1000.0;
inline constexpr double kMeasurementScaleM = 100.0;   // c_m
inline constexpr double kGrowthLengthM = 1000.0;      // L
inline constexpr double kErrorScaleM = 50.0;          // e0
inline constexpr double kCalibrationSnr = 20.0;       // at 2 kW, 6 ms, 50 km
inline constexpr double kCalibrationPowerKw = 2.0;
inline constexpr double kCalibrationDurationMs = 6.0;
inline constexpr double kCalibrationRangeKm = 50.0;

struct SpeedInterval {
  double lo;
  double hi;
};
SpeedInterval speed_interval(TargetType t);
double type_weight(TargetType t);
/// K in snr = K * P * tau / range^4 (kW, ms, km).
double snr_constant();
}  // namespace model

/// Draw one target from the generation distributions (type uniform, range
/// uniform in [5, 150] km, speed uniform within the type's interval).
Target sample_target(Rng& rng, int id);

/// n targets with ids 0..n-1; throws ArgumentError for n == 0.
Scenario generate_scenario(std::size_t n_targets, std::uint64_t seed);

double snr(const Configuration& config, const Target& target);
QualityValue quality(const Configuration& config, const Target& target);
double utility_from_quality(const QualityValue& q, const Target& target);
double task_utility(const Configuration& config, const Target& target);

}  // namespace qram

#endif  // QRAM_PERF_MODEL_HPP
