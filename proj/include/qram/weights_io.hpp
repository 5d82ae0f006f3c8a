#ifndef QRAM_WEIGHTS_IO_HPP
#define QRAM_WEIGHTS_IO_HPP

#include <filesystem>

#include "qram/config.hpp"
#include "qram/network.hpp"

namespace qram {

/// A trained agent: network parameters plus the grid its actions index.
struct AgentModel {
  AgentParams params;
  ConfigSpace grid;
};

// Weight file layout (all integers little-endian):
//
//   offset 0   8 bytes   magic "QRAMWGT1"
//   offset 8   u64       header length H
//   offset 16  H bytes   JSON header: format, hidden, n_actions, layers
//                        [{name, in, out, activation}], grid, parameter_count
//   16 + H     8 * N     parameters as IEEE-754 binary64, layer by layer in
//                        header order, each layer's weights (row-major out x in)
//                        followed by its bias
void save_weights(const std::filesystem::path& path, const AgentParams& params, const ConfigSpace& grid);

/// Throws LoadError on bad magic, unsupported format, shape mismatch or a
/// truncated/oversized payload.
AgentModel load_weights(const std::filesystem::path& path);

}  // namespace qram

#endif  // QRAM_WEIGHTS_IO_HPP
