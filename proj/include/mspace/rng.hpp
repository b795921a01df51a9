#pragma once

#include <cstdint>

#include "mspace/matrix.hpp"

namespace mspace {

// Deterministic 64-bit multiply-xorshift generator (splitmix64). Seeds are
// recorded in suite reports so every failure replays.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // Derives an independent substream seed, so sample i can be generated
    // without generating samples 0..i-1.
    static std::uint64_t substream(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 g(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
        return g.next();
    }

private:
    std::uint64_t state_;
};

Matrix random_matrix(FieldDesc field, int rows, int cols, SplitMix64& rng);
// Rejection sampling on det != 0.
Matrix random_invertible(FieldDesc field, int n, SplitMix64& rng);
// Rejection sampling against is_isotropic; finite odd fields, m in {1, 2}.
Matrix random_nonisotropic_gram(FieldDesc field, int m, SplitMix64& rng);

} // namespace mspace
