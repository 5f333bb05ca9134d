#pragma once
#include <cmath>
#include <cstdint>

namespace geim {

/// Counter-based deterministic random stream: each (seed, stream, draw)
/// triple maps to an independent value regardless of evaluation order.
namespace rng {

inline uint64_t mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline double uniform01(uint64_t key) {
  // in (0,1), never exactly 0 or 1
  return (static_cast<double>(mix64(key) >> 11) + 0.5) * 0x1.0p-53;
}

inline double standard_normal(uint64_t seed, uint64_t stream, uint64_t draw) {
  const uint64_t k = mix64(seed ^ mix64(stream ^ mix64(draw)));
  const double u1 = uniform01(k);
  const double u2 = uniform01(k ^ 0x5851f42d4c957f2dull);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

}  // namespace rng
}  // namespace geim
