#include "qram/perf_model.hpp"

#include <cmath>

#include "qram/errors.hpp"

namespace qram {

std::string_view to_string(TargetType t) {
  switch (t) {
    case TargetType::Helicopter: return "Helicopter";
    case TargetType::Fighter: return "Fighter";
    case TargetType::Missile: return "Missile";
  }
  return "Helicopter";
}

std::optional<TargetType> parse_target_type(std::string_view s) {
  if (s == "Helicopter") return TargetType::Helicopter;
  if (s == "Fighter") return TargetType::Fighter;
  if (s == "Missile") return TargetType::Missile;
  return std::nullopt;
}

const Target* Scenario::find(int id) const {
  for (const auto& t : targets)
    if (t.id == id) return &t;
  return nullptr;
}

namespace model {

SpeedInterval speed_interval(TargetType t) {
  switch (t) {
    case TargetType::Helicopter: return {0.0, 100.0};
    case TargetType::Fighter: return {100.0, 450.0};
    case TargetType::Missile: return {300.0, 1000.0};
  }
  return {0.0, 0.0};
}

double type_weight(TargetType t) {
  switch (t) {
    case TargetType::Helicopter: return 1.0;
    case TargetType::Fighter: return 1.2;
    case TargetType::Missile: return 1.5;
  }
  return 0.0;
}

double snr_constant() {
  const double r2 = kCalibrationRangeKm * kCalibrationRangeKm;
  return kCalibrationSnr * r2 * r2 / (kCalibrationPowerKw * kCalibrationDurationMs);
}

}  // namespace model

Target sample_target(Rng& rng, int id) {
  Target t;
  t.id = id;
  t.ttype = static_cast<TargetType>(rng.index(kTargetTypes));
  t.range_km = rng.uniform(model::kMinRangeKm, model::kMaxRangeKm);
  const auto [lo, hi] = model::speed_interval(t.ttype);
  t.speed_mps = rng.uniform(lo, hi);
  return t;
}

Scenario generate_scenario(std::size_t n_targets, std::uint64_t seed) {
  if (n_targets == 0) throw ArgumentError("generate_scenario: at least one target required");
  Rng rng(seed);
  Scenario s;
  s.seed = seed;
  s.targets.reserve(n_targets);
  for (std::size_t i = 0; i < n_targets; ++i) s.targets.push_back(sample_target(rng, static_cast<int>(i)));
  return s;
}

double snr(const Configuration& config, const Target& target) {
  const double r2 = target.range_km * target.range_km;
  return model::snr_constant() * config.transmit_power_kw * config.transmit_duration_ms / (r2 * r2);
}

QualityValue quality(const Configuration& config, const Target& target) {
  const double sigma = model::kMeasurementScaleM / std::sqrt(snr(config, target));
  // dwell length acts as the revisit period
  const double drift = target.speed_mps * (config.dwell_length_ms / 1000.0) / model::kGrowthLengthM;
  return {sigma * std::sqrt(1.0 + drift * drift)};
}

double utility_from_quality(const QualityValue& q, const Target& target) {
  return model::type_weight(target.ttype) / (1.0 + q.track_error_m / model::kErrorScaleM);
}

double task_utility(const Configuration& config, const Target& target) {
  return utility_from_quality(quality(config, target), target);
}

}  // namespace qram
