#ifndef QRAM_SERIALIZE_HPP
#define QRAM_SERIALIZE_HPP

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "qram/config.hpp"
#include "qram/perf_model.hpp"
#include "qram/problem.hpp"
#include "qram/solution.hpp"

namespace qram {

inline constexpr int kJsonFormat = 1;

using json = nlohmann::ordered_json;

json to_json(const Configuration& c);
Configuration configuration_from_json(const json& j);

json to_json(const ConfigSpace& s);
ConfigSpace config_space_from_json(const json& j);

json to_json(const ResourceBounds& b);
ResourceBounds bounds_from_json(const json& j);

/// {"format": 1, "seed", "targets": [{"id", "type", "range_km", "speed_mps"}]}
json to_json(const Scenario& s);
Scenario scenario_from_json(const json& j);

/// {"format": 1, "tasks": [...], "bounds": {...}, "scenario": {...}}
json to_json(const ProblemInstance& p);
ProblemInstance instance_from_json(const json& j);

json to_json(const Solution& s);

/// Parse a file; throws LoadError on I/O or syntax problems.
json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

}  // namespace qram

#endif  // QRAM_SERIALIZE_HPP
