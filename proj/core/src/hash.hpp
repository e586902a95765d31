#pragma once

#include <cstdint>
#include <span>

namespace orbitscope::detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t value) {
  return splitmix64(seed ^ (splitmix64(value) + 0x632be59bd9b4e019ULL + (seed << 6) + (seed >> 2)));
}

inline std::uint64_t hash_range(std::span<const std::uint64_t> values,
                                std::uint64_t seed = 0x243f6a8885a308d3ULL) {
  for (std::uint64_t v : values) seed = hash_combine(seed, v);
  return seed;
}

}  // namespace orbitscope::detail
