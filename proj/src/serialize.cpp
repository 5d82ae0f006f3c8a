#include "qram/serialize.hpp"

#include <fstream>

#include "qram/errors.hpp"

namespace qram {

namespace {

void check_format(const json& j, const char* what) {
  if (!j.is_object() || !j.contains("format") || j.at("format") != kJsonFormat)
    throw LoadError(std::string(what) + ": missing or unsupported \"format\" (expected 1)");
}

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw LoadError(std::string(what) + ": " + e.what());
  } catch (const ArgumentError& e) {
    throw LoadError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

json to_json(const Configuration& c) {
  return {{"dwell_length_ms", c.dwell_length_ms},
          {"transmit_duration_ms", c.transmit_duration_ms},
          {"transmit_power_kw", c.transmit_power_kw}};
}

Configuration configuration_from_json(const json& j) {
  return {j.at("dwell_length_ms").get<double>(), j.at("transmit_duration_ms").get<double>(),
          j.at("transmit_power_kw").get<double>()};
}

json to_json(const ConfigSpace& s) {
  return {{"dwell_grid", s.dwell_grid()},
          {"tx_duration_grid", s.tx_duration_grid()},
          {"tx_power_grid", s.tx_power_grid()}};
}

ConfigSpace config_space_from_json(const json& j) {
  return ConfigSpace(j.at("dwell_grid").get<std::vector<double>>(),
                     j.at("tx_duration_grid").get<std::vector<double>>(),
                     j.at("tx_power_grid").get<std::vector<double>>());
}

json to_json(const ResourceBounds& b) {
  return {{"bounds", b.bounds()}, {"compound_weights", b.compound_weights()}};
}

ResourceBounds bounds_from_json(const json& j) {
  return ResourceBounds(j.at("bounds").get<std::vector<double>>(),
                        j.at("compound_weights").get<std::vector<double>>());
}

json to_json(const Scenario& s) {
  json targets = json::array();
  for (const auto& t : s.targets)
    targets.push_back({{"id", t.id},
                       {"type", std::string(to_string(t.ttype))},
                       {"range_km", t.range_km},
                       {"speed_mps", t.speed_mps}});
  return {{"format", kJsonFormat}, {"seed", s.seed}, {"targets", std::move(targets)}};
}

Scenario scenario_from_json(const json& j) {
  check_format(j, "scenario");
  return guarded("scenario", [&] {
    Scenario s;
    s.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& t : j.at("targets")) {
      Target target;
      target.id = t.at("id").get<int>();
      const auto type = parse_target_type(t.at("type").get<std::string>());
      if (!type) throw LoadError("scenario: unknown target type " + t.at("type").dump());
      target.ttype = *type;
      target.range_km = t.at("range_km").get<double>();
      target.speed_mps = t.at("speed_mps").get<double>();
      if (!(target.range_km > 0.0)) throw LoadError("scenario: target range must be positive");
      s.targets.push_back(target);
    }
    return s;
  });
}

json to_json(const ProblemInstance& p) {
  json tasks = json::array();
  for (const auto& t : p.tasks())
    tasks.push_back({{"id", t.id},
                     {"task_type", "tracking"},
                     {"target_ref", t.target_ref},
                     {"config_space", to_json(t.config_space)}});
  json scenario = to_json(p.scenario());
  return {{"format", kJsonFormat}, {"tasks", std::move(tasks)}, {"bounds", to_json(p.bounds())},
          {"scenario", std::move(scenario)}};
}

ProblemInstance instance_from_json(const json& j) {
  check_format(j, "instance");
  return guarded("instance", [&] {
    std::vector<Task> tasks;
    for (const auto& t : j.at("tasks")) {
      if (t.at("task_type") != "tracking") throw LoadError("instance: only tracking tasks are supported");
      tasks.push_back(Task{t.at("id").get<int>(), TaskType::Tracking, t.at("target_ref").get<int>(),
                           config_space_from_json(t.at("config_space"))});
    }
    return ProblemInstance(std::move(tasks), bounds_from_json(j.at("bounds")),
                           scenario_from_json(j.at("scenario")));
  });
}

json to_json(const Solution& s) {
  json tasks = json::array();
  for (const auto& [id, config] : s.allocation)
    tasks.push_back({{"id", id}, {"config", to_json(config)}, {"utility", s.task_utilities.at(id)}});
  json trace = json::array();
  for (const auto& step : s.trace)
    trace.push_back({{"task", step.task_id},
                     {"from", to_json(step.from)},
                     {"to", to_json(step.to)},
                     {"ratio", step.ratio},
                     {"accepted", step.accepted}});
  return {{"tasks", std::move(tasks)},       {"system_utility", s.utility}, {"resource_usage", s.usage},
          {"dropped", s.dropped},            {"trace", std::move(trace)}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw LoadError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw LoadError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace qram
