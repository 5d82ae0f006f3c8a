#include "qram/random.hpp"

#include <limits>

#include "qram/errors.hpp"

namespace qram {

double Rng::uniform01() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

std::size_t Rng::index(std::size_t n) {
  if (n == 0) throw ArgumentError("Rng::index: empty range");
  const std::uint64_t range = n;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  // largest multiple of range that fits; values above it are rejected
  const std::uint64_t limit = max - (max % range + 1) % range;
  std::uint64_t x = next();
  while (x > limit) x = next();
  return static_cast<std::size_t>(x % range);
}

}  // namespace qram
