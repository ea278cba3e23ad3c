#pragma once

#include <cstdint>
#include <random>

namespace conical {

// Counter-based seed splitting: one global seed expands into independent
// per-task seeds so parallel and serial runs produce identical streams.
inline uint64_t split_seed(uint64_t seed, uint64_t task) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (task + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::mt19937_64 make_rng(uint64_t seed, uint64_t task = 0) {
  return std::mt19937_64(split_seed(seed, task));
}

}  // namespace conical
