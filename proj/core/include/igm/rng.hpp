#pragma once

#include <cstdint>
#include <random>

namespace igm {

/// Engine used everywhere a seed is accepted. mt19937_64 output is fixed by
/// the standard, and the helpers below avoid the implementation-defined
/// std:: distributions, so draws are identical across standard libraries.
using Engine = std::mt19937_64;

/// One SplitMix64 finalization step.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Seed of stream `index` split from `master`: the (index+1)-th output of a
/// SplitMix64 generator started at `master`.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return splitmix64(master + index * 0x9E3779B97F4A7C15ull);
}

/// Uniform integer in [0, bound) by rejection; bound must be positive.
inline std::uint64_t uniform_index(Engine& eng, std::uint64_t bound) {
  const std::uint64_t limit = Engine::max() - (Engine::max() % bound + 1) % bound;
  std::uint64_t v;
  do {
    v = eng();
  } while (v > limit);
  return v % bound;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Engine& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline double uniform_real(Engine& eng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(eng);
}

}  // namespace igm
