#ifndef QRAM_QUOTIENT_HPP
#define QRAM_QUOTIENT_HPP

namespace qram {

inline constexpr double kResourceEpsilon = 1e-9;
inline constexpr double kUtilityEpsilon = 1e-12;
inline constexpr double kQuotientCap = 50.0;

/// du / dr, with the degenerate |dr| < 1e-9 case mapped to 0 (no utility change)
/// or +-kQuotientCap (free utility gain / loss).
inline double utility_resource_quotient(double du, double dr) {
  if (dr < kResourceEpsilon && dr > -kResourceEpsilon) {
    if (du < kUtilityEpsilon && du > -kUtilityEpsilon) return 0.0;
    return du > 0.0 ? kQuotientCap : -kQuotientCap;
  }
  return du / dr;
}

}  // namespace qram

#endif  // QRAM_QUOTIENT_HPP
