#pragma once

#include <cmath>
#include <cstdint>

namespace irsa {

// SplitMix64 finalizer (Steele, Lea, Flood 2014). Used for seed derivation
// and for expanding a 64-bit seed into generator state.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Derives the seed of stream `index` from a master seed. Streams are
// decorrelated by hashing, so trial i and trial i+1 do not share state.
constexpr std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(master ^ mix64(index ^ 0xA0761D6478BD642FULL));
}

// xoshiro256** 1.0 (Blackman, Vigna 2018). State expanded from the seed with
// SplitMix64, as recommended by the authors. Deterministic across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t z = seed;
        for (auto& w : state_) {
            w = mix64(z);
            z = w;
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform double in [0,1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Unbiased integer in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    // Knuth's product method; fine for the small means used here.
    int poisson(double mean) {
        if (mean <= 0.0) return 0;
        const double limit = std::exp(-mean);
        double p = 1.0;
        int k = 0;
        for (;;) {
            p *= uniform01();
            if (p <= limit) return k;
            ++k;
        }
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4];
};

}  // namespace irsa
