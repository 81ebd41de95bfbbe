#pragma once

#include <cstdint>
#include <random>

namespace sspo {

/// splitmix64 finalizer; used to derive independent seed streams from
/// (seed, step, slot, ...) coordinates so rollouts are reproducible and
/// order-independent across queries.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
  return mix64(mix64(mix64(seed ^ mix64(a)) ^ mix64(b)) ^ mix64(c));
}

/// Uniform double in [0, 1) with exactly 53 random bits. std::mt19937_64 is
/// specified bit-for-bit by the standard, so draws are portable; the library
/// distributions are not, which is why we never use them.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace sspo
