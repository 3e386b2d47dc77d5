#pragma once

#include <cstdint>

namespace eguard {

/// splitmix64 step; the permutation is fixed by construction so that
/// sequences are identical across platforms and standard libraries.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based stream splitting: every consumer of randomness derives its
/// own seed from the single master seed and a stream index, so independent
/// streams (per-trial Monte Carlo, tie-breaking, attack generation) never
/// share state and stay reproducible under parallel execution.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t s = master ^ (0xa0761d6478bd642fULL * (stream + 1));
  splitmix64(s);
  return splitmix64(s);
}

/// Well-known stream indices.
inline constexpr std::uint64_t kStreamTieBreak = 1;
inline constexpr std::uint64_t kStreamAttacks = 2;
inline constexpr std::uint64_t kStreamMonteCarlo = 3;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() { return splitmix64(state_); }

  /// Unbiased uniform draw from [0, bound) via rejection.
  std::uint64_t below(std::uint64_t bound) {
    // bound == 0 is a caller bug; keep the behaviour defined.
    if (bound <= 1) return 0;
    const std::uint64_t limit = ~0ULL - (~0ULL % bound) - 1;
    std::uint64_t x = next();
    while (x > limit) x = next();
    return x % bound;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool coin() { return next() & 1u; }

 private:
  std::uint64_t state_;
};

}  // namespace eguard
