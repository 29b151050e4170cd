#pragma once

#include <cstdint>

namespace hmf {

// Deterministic RNG with a platform-independent output sequence
// (std::uniform_int_distribution is implementation-defined, so the
// verification suites roll their own sampling on top of splitmix64).
class DetRng {
  uint64_t state_;

 public:
  explicit DetRng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi] inclusive, by rejection.
  int64_t uniform(int64_t lo, int64_t hi) {
    uint64_t range = static_cast<uint64_t>(hi - lo) + 1;
    uint64_t limit = ~0ULL - (~0ULL % range);
    uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return lo + static_cast<int64_t>(x % range);
  }
};

}  // namespace hmf
