#include "qram/weights_io.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>

#include "qram/errors.hpp"
#include "qram/serialize.hpp"

namespace qram {

namespace {

constexpr std::array<char, 8> kMagic{'Q', 'R', 'A', 'M', 'W', 'G', 'T', '1'};

void put_u64(std::string& out, std::uint64_t v) {
  for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((v >> (8 * b)) & 0xFF));
}

std::uint64_t get_u64(const std::string& in, std::size_t at) {
  std::uint64_t v = 0;
  for (int b = 0; b < 8; ++b) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in[at + b])) << (8 * b);
  return v;
}

const char* activation_of(const std::string& name) {
  return name == "policy_head" || name == "value_head" ? "linear" : "relu";
}

json header_for(const AgentParams& params, const ConfigSpace& grid) {
  json layers = json::array();
  const auto& names = AgentParams::layer_names();
  const auto ls = params.layers();
  for (std::size_t i = 0; i < ls.size(); ++i)
    layers.push_back({{"name", names[i]}, {"in", ls[i]->in}, {"out", ls[i]->out},
                      {"activation", activation_of(names[i])}});
  return {{"format", kJsonFormat},
          {"hidden", params.hidden()},
          {"n_actions", params.n_actions()},
          {"layers", std::move(layers)},
          {"grid", to_json(grid)},
          {"parameter_count", params.parameter_count()}};
}

}  // namespace

void save_weights(const std::filesystem::path& path, const AgentParams& params, const ConfigSpace& grid) {
  if (params.n_actions() != grid.size()) throw ContractViolation("save_weights: grid does not match network outputs");
  const std::string header = header_for(params, grid).dump();
  std::string bytes(kMagic.begin(), kMagic.end());
  put_u64(bytes, header.size());
  bytes += header;
  for (double w : params.flatten()) put_u64(bytes, std::bit_cast<std::uint64_t>(w));
  std::ofstream out(path, std::ios::binary);
  if (!out) throw LoadError("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw LoadError("write failed for " + path.string());
}

AgentModel load_weights(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open " + path.string());
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (bytes.size() < 16 || std::memcmp(bytes.data(), kMagic.data(), kMagic.size()) != 0)
    throw LoadError(path.string() + ": not a weight file (bad magic)");
  const std::uint64_t header_len = get_u64(bytes, 8);
  if (header_len > bytes.size() - 16) throw LoadError(path.string() + ": truncated header");

  json header;
  try {
    header = json::parse(bytes.substr(16, header_len));
  } catch (const json::exception& e) {
    throw LoadError(path.string() + ": corrupt header: " + e.what());
  }
  try {
    if (header.at("format") != kJsonFormat) throw LoadError(path.string() + ": unsupported weight format");
    ConfigSpace grid = config_space_from_json(header.at("grid"));
    const auto n_actions = header.at("n_actions").get<std::size_t>();
    const auto hidden = header.at("hidden").get<std::size_t>();
    if (grid.size() != n_actions) throw LoadError(path.string() + ": grid does not match action count");
    AgentParams params = AgentParams::zeros(n_actions, hidden);
    if (header.at("layers") != header_for(params, grid).at("layers"))
      throw LoadError(path.string() + ": layer shapes do not match the split-input architecture");
    const auto count = header.at("parameter_count").get<std::size_t>();
    if (count != params.parameter_count()) throw LoadError(path.string() + ": parameter count mismatch");
    const std::size_t payload_at = 16 + header_len;
    if (bytes.size() - payload_at != count * 8) throw LoadError(path.string() + ": payload size mismatch");
    std::vector<double> flat(count);
    for (std::size_t i = 0; i < count; ++i) flat[i] = std::bit_cast<double>(get_u64(bytes, payload_at + 8 * i));
    params.unflatten(flat);
    return {std::move(params), std::move(grid)};
  } catch (const json::exception& e) {
    throw LoadError(path.string() + ": corrupt header: " + e.what());
  } catch (const ArgumentError& e) {
    throw LoadError(path.string() + ": " + e.what());
  }
}

}  // namespace qram
