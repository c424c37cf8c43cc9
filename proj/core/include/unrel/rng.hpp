#pragma once

#include <cstdint>
#include <random>

namespace unrel {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derives the seed of child stream `key` from `seed`. Streams keyed by
/// position (sample index, branch index) make results independent of
/// scheduling.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t key) noexcept {
  return mix64(mix64(seed) ^ mix64(key + 0x632be59bd9b4e019ULL));
}

inline Rng make_rng(std::uint64_t seed, std::uint64_t key) { return Rng(derive_seed(seed, key)); }

/// Fresh child stream drawn from a running generator.
inline Rng fork(Rng& rng) { return Rng(mix64(rng())); }

}  // namespace unrel
