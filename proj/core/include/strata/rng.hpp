#pragma once

// Deterministic RNG used by every generator.  A hand-rolled splitmix64 /
// xoshiro-style stepper; std::uniform_int_distribution is avoided since its
// algorithm is implementation-defined and would break byte-identical runs
// across toolchains.

#include <cstdint>

namespace strata {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n); n > 0.  Modulo bias is irrelevant at our ranges.
  int below(int n) { return int(next() % std::uint64_t(n)); }

  // uniform in [lo, hi] inclusive
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

  // derive an independent stream for a sample index
  Rng fork(std::uint64_t salt) const {
    return Rng(state_ ^ (salt * 0xd6e8feb86659fd93ULL + 0x2545f4914f6cdd1dULL));
  }

 private:
  std::uint64_t state_;
};

}  // namespace strata
