#pragma once

#include <cstdint>

namespace posegen {

// Counter-based deterministic random values. Every draw is a pure function of
// (seed, stream, counter), so results do not depend on call order, thread
// count, or platform. The mixer is splitmix64 (Steele et al.), applied to the
// xor-folded key.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t mix_key(uint64_t seed, uint64_t stream, uint64_t counter) {
  uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ stream);
  h = splitmix64(h ^ counter);
  return h;
}

// Uniform double in [0, 1) using the top 53 bits.
inline double uniform01(uint64_t seed, uint64_t stream, uint64_t counter) {
  return double(mix_key(seed, stream, counter) >> 11) * 0x1.0p-53;
}

inline double uniform_range(uint64_t seed, uint64_t stream, uint64_t counter, double lo, double hi) {
  return lo + (hi - lo) * uniform01(seed, stream, counter);
}

// Uniform index in [0, n).
inline uint64_t uniform_index(uint64_t seed, uint64_t stream, uint64_t counter, uint64_t n) {
  return uint64_t(uniform01(seed, stream, counter) * double(n)) % n;
}

// Stream tags keep independent draw sequences from colliding on one seed.
namespace rng_stream {
inline constexpr uint64_t kCameraElevation = 0x101;
inline constexpr uint64_t kCameraAzimuth = 0x102;
inline constexpr uint64_t kCameraRadius = 0x103;
inline constexpr uint64_t kSceneAsset = 0x201;
inline constexpr uint64_t kSceneBackground = 0x202;
inline constexpr uint64_t kSceneMotion = 0x203;
inline constexpr uint64_t kProceduralAsset = 0x301;
}  // namespace rng_stream

}  // namespace posegen
