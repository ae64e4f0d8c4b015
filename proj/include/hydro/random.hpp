#pragma once

#include <cstdint>
#include <initializer_list>

namespace hydro {

/// splitmix64 finaliser.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Counter-based hash of a key tuple; the same key always gives the same value.
inline std::uint64_t hash_key(std::initializer_list<std::int64_t> key) {
  std::uint64_t h = 0x6a09e667f3bcc909ULL;
  for (std::int64_t k : key) h = mix64(h ^ static_cast<std::uint64_t>(k));
  return h;
}

/// Uniform in [0, 1) from a key tuple.
inline double hash_uniform(std::initializer_list<std::int64_t> key) {
  return static_cast<double>(hash_key(key) >> 11) * 0x1.0p-53;
}

}  // namespace hydro
