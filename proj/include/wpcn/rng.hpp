#pragma once

#include <cmath>
#include <cstdint>

namespace wpcn {

// Counter-based generator: every (seed, epoch, node) triple is hashed to its
// own 64-bit state, so draws do not depend on evaluation order or thread
// scheduling.

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_key(std::uint64_t seed, std::uint64_t epoch,
                             std::uint64_t node) {
  std::uint64_t h = splitmix64(seed ^ 0x6a09e667f3bcc909ULL);
  h = splitmix64(h ^ epoch);
  h = splitmix64(h ^ (node * 0x2545f4914f6cdd1dULL));
  return h;
}

/// Uniform draw strictly inside (0, 1): the 53-bit mantissa is offset by half
/// an ulp so neither endpoint is reachable.
inline double uniform01(std::uint64_t key) {
  return (static_cast<double>(key >> 11) + 0.5) * 0x1.0p-53;
}

/// Exponentially distributed draw with the given mean (inverse CDF).
/// Strictly positive for any key.
inline double exponential_sample(std::uint64_t key, double mean) {
  return -mean * std::log1p(-uniform01(key));
}

}  // namespace wpcn
