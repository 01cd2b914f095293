#pragma once

#include <cstdint>
#include <random>

namespace cfcolor {

/// Every randomized procedure owns one of these, seeded explicitly.
using Rng = std::mt19937_64;

/// splitmix64 finalizer; derives independent per-record seeds.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace cfcolor
