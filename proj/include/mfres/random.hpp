#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace mfres {

// Distribution objects in <random> are not portable across standard libraries; these draws are.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 1));
}

// Uniform in [0, n).
inline std::uint64_t bounded_draw(std::mt19937_64& g, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("bounded_draw: empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  for (;;) {
    std::uint64_t v = g();
    if (v < limit) return v % n;
  }
}

}  // namespace mfres
