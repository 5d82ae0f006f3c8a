#ifndef QRAM_RANDOM_HPP
#define QRAM_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>

namespace qram {

/// Portable seeded generator.
///
/// The raw stream is std::mt19937_64, whose output sequence is fixed by the
/// C++ standard. The real and integer mappings below are defined here rather
/// than through <random> distributions (those are implementation-defined), so
/// a seed yields the same scenarios with any conforming toolchain:
///
///   uniform01()   = (next() >> 11) * 2^-53            in [0, 1)
///   index(n)      = rejection sampling on next() with limit 2^64 - (2^64 mod n)
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform01();
  double uniform(double lo, double hi);
  std::size_t index(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace qram

#endif  // QRAM_RANDOM_HPP
