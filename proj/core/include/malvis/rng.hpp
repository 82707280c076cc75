#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace malvis {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

/// Stable seed for a named substream of a master seed. Every stage of the
/// pipeline draws from its own stream so stages can be re-run in isolation.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag) {
  std::uint64_t s = master ^ fnv1a64(tag);
  return splitmix64(s);
}

inline std::mt19937_64 seeded_engine(std::uint64_t master, std::string_view tag) {
  return std::mt19937_64(derive_seed(master, tag));
}

/// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
inline double uniform01(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, n).
inline std::uint64_t uniform_below(std::mt19937_64& g, std::uint64_t n) {
  return static_cast<std::uint64_t>(uniform01(g) * static_cast<double>(n)) % n;
}

}  // namespace malvis
