#pragma once

#include <cstdint>

// Deterministic random number generation.  std::mt19937 would be fine for the
// state transition, but the standard distributions are not pinned across
// implementations, and byte-identical output for a fixed seed is part of the
// CLI contract.  So both the generator and the integer draws live here.

namespace qrv {

struct SplitMix64 {
    uint64_t state;

    uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

// xoshiro256** seeded through SplitMix64.
class Rng {
  public:
    explicit Rng(uint64_t seed) {
        SplitMix64 sm{seed};
        for (auto& w : s_) w = sm.next();
    }

    uint64_t next() {
        uint64_t result = rotl(s_[1] * 5, 7) * 9;
        uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Unbiased draw from [0, n), n >= 1.
    uint64_t below(uint64_t n) {
        uint64_t limit = n * ((~uint64_t{0}) / n);
        uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }

    // Uniform in [lo, hi], inclusive.
    int64_t int_in(int64_t lo, int64_t hi) {
        return lo + (int64_t)below((uint64_t)(hi - lo) + 1);
    }

  private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

// Stable per-trial seed derivation: every parallel or resumable loop draws its
// own generator from (master, stream, index) so results do not depend on
// scheduling or thread count.
inline uint64_t derive_seed(uint64_t master, uint64_t stream, uint64_t index) {
    SplitMix64 a{master};
    SplitMix64 b{a.next() ^ (0x9e3779b97f4a7c15ull * (stream + 1))};
    SplitMix64 c{b.next() ^ (0xbf58476d1ce4e5b9ull * (index + 1))};
    return c.next();
}

}  // namespace qrv
