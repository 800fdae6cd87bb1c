#pragma once

#include <cstdint>

namespace pprimary {

// SplitMix64. Deterministic across platforms, which the verification
// harness relies on: every report must be reproducible from its seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish draw in [0, bound). Bound must be positive; the modulo
    // bias is irrelevant at the bounds used here (all far below 2^62).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  private:
    std::uint64_t state_;
};

// Stable sub-seed derivation so that independent sampling streams (one per
// grid cell, per claim) never alias.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
    Rng r(base ^ (a * 0xd1342543de82ef95ULL) ^ (b * 0xaf251af3b0f025b5ULL) ^
          (c * 0x9e3779b97f4a7c15ULL));
    r.next();
    return r.next();
}

} // namespace pprimary
