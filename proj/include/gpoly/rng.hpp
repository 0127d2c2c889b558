#pragma once

#include <cstdint>

#include "gpoly/rational.hpp"

namespace gpoly {

// xorshift64* generator: shifts 12/25/27, multiplier 0x2545F4914F6CDD1D.
// The raw seed is passed through one splitmix64 step (increment
// 0x9E3779B97F4A7C15, mixers 0xBF58476D1CE4E5B9 / 0x94D049BB133111EB)
// so that seed 0 yields a nonzero state. The contract is cross-run
// determinism per seed, not cross-implementation bit equality.
class XorShift64 {
public:
    explicit XorShift64(uint64_t seed);

    uint64_t next();

    // Unbiased value in [0, bound) via rejection; bound > 0.
    uint64_t next_below(uint64_t bound);

    // Exact Bernoulli draw: true with probability p, 0 <= p <= 1.
    bool bernoulli(const Rat& p);

    // Uniform rational a/b with a in [0, scale], b = scale.
    Rat next_rational(uint64_t scale);

private:
    uint64_t state_;
};

// Derives an independent stream seed; used to fan one experiment seed
// out over samples.
uint64_t derive_seed(uint64_t seed, uint64_t index);

} // namespace gpoly
