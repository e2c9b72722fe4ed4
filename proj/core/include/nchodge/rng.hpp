// Deterministic seeded RNG for test sampling and report reproducibility.
// splitmix64 is used instead of <random> distributions because the standard
// distributions are implementation-defined and would break byte-identical
// reports across toolchains.
#pragma once

#include <cstdint>
#include <vector>

namespace nchodge {

struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-enough value in [0, n); n must be positive. The modulo bias is
  // negligible for the small moduli used here and costs no portability.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  long range(long lo, long hi) { // inclusive bounds
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (next() & 1) != 0; }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }
};

} // namespace nchodge
