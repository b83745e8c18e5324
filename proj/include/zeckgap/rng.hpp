#pragma once

#include <cstdint>
#include <random>

#include "zeckgap/core.hpp"

namespace zeckgap {

/// splitmix64 finalizer; used to derive independent per-worker seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed for worker `w` of a parallel run keyed by `seed`. Worker streams are
/// pairwise distinct and reproducible for a fixed (seed, worker) pair.
inline std::uint64_t derive_seed(std::uint64_t seed, unsigned worker) {
  return splitmix64(seed ^ ((worker + 1) * 0x9E3779B97F4A7C15ULL));
}

/// Uniform integer in [0, bound) for bound >= 1, without rejection: draws
/// 64 extra bits beyond bit_length(bound) and maps by multiply-shift, so the
/// per-value bias is below 2^-64 and the draw count per sample is fixed.
/// mt19937_64 output is pinned by the standard, so streams are stable across
/// platforms.
inline BigInt uniform_below(std::mt19937_64& rng, const BigInt& bound) {
  if (bound <= 0) throw ConfigError("uniform_below: bound must be positive");
  const unsigned bits = boost::multiprecision::msb(bound) + 1 + 64;
  const unsigned words = (bits + 63) / 64;
  BigInt r = 0;
  for (unsigned w = 0; w < words; ++w) {
    r |= BigInt(rng()) << (64 * w);
  }
  r &= (BigInt(1) << bits) - 1;
  return (r * bound) >> bits;
}

}  // namespace zeckgap
