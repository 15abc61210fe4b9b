#pragma once

#include <cstdint>
#include <random>

namespace ipd {

// SplitMix64 finalizer, used here as a stateless 64-bit mixer.
inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Published per-match seed derivation:
//   derive_seed(master, a, b) = sm64(sm64(sm64(master) ^ a) ^ b)
// Every match seed is a pure function of (master_seed, pair_index, repetition),
// so results do not depend on scheduling or thread count.
inline constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                           std::uint64_t b) {
  return splitmix64(splitmix64(splitmix64(master) ^ a) ^ b);
}

// Uniform double in [0, 1) from the top 53 bits of the generator output.
// std::uniform_real_distribution is implementation-defined; this is not.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n) via the 128-bit multiply trick.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(rng()) * n) >> 64);
}

}  // namespace ipd
