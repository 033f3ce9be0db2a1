/// Counter-based deterministic random draws.
///
/// Every random quantity in the library is a pure function of
/// (seed, index, channel).  Replaying a stream, shifting it, or evaluating
/// events out of order never perturbs other draws.
#pragma once

#include <cstdint>
#include <cmath>

namespace hydrolim::rng {

inline constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ull;

inline uint64_t splitmix64(uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// 64-bit hash of (seed, index, channel); statistically independent draws
/// for distinct triples.
inline uint64_t mix(uint64_t seed, uint64_t index, uint64_t channel) {
  uint64_t h = splitmix64(seed ^ (kGolden * 0x2545f4914f6cdd1dull));
  h = splitmix64(h ^ index);
  h = splitmix64(h ^ (channel * 0xda942042e4dd58b5ull));
  return h;
}

/// Uniform double in [0, 1).
inline double u01(uint64_t seed, uint64_t index, uint64_t channel) {
  return static_cast<double>(mix(seed, index, channel) >> 11) * 0x1.0p-53;
}

/// Exponential with unit rate, strictly positive.
inline double exponential(uint64_t seed, uint64_t index, uint64_t channel) {
  // 1 - u01 lies in (0, 1], so the log argument never vanishes.
  return -std::log(1.0 - u01(seed, index, channel));
}

/// Uniform integer in [0, n).
inline uint64_t below(uint64_t seed, uint64_t index, uint64_t channel, uint64_t n) {
  return static_cast<uint64_t>(u01(seed, index, channel) * static_cast<double>(n)) % n;
}

}  // namespace hydrolim::rng
