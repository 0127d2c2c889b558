#include "gpoly/rng.hpp"

#include <stdexcept>

namespace gpoly {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

} // namespace

XorShift64::XorShift64(uint64_t seed) : state_(splitmix64(seed)) {
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ull;
}

uint64_t XorShift64::next() {
    uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545F4914F6CDD1Dull;
}

uint64_t XorShift64::next_below(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("next_below(0)");
    // Rejection keeps the draw unbiased.
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

bool XorShift64::bernoulli(const Rat& p) {
    if (sgn(p) < 0 || p > 1) throw std::invalid_argument("bernoulli probability outside [0,1]");
    if (sgn(p) == 0) return false;
    if (p == 1) return true;
    // r uniform in [0, 2^64); accept iff r / 2^64 < p, i.e. r * den < num * 2^64.
    uint64_t r = next();
    mpz_class lhs(0);
    mpz_import(lhs.get_mpz_t(), 1, 1, sizeof(r), 0, 0, &r);
    lhs *= p.get_den();
    mpz_class rhs = p.get_num();
    rhs <<= 64;
    return lhs < rhs;
}

Rat XorShift64::next_rational(uint64_t scale) {
    if (scale == 0) throw std::invalid_argument("next_rational(0)");
    uint64_t a = next_below(scale + 1);
    Rat out(static_cast<unsigned long>(a), static_cast<unsigned long>(scale));
    out.canonicalize();
    return out;
}

uint64_t derive_seed(uint64_t seed, uint64_t index) {
    return splitmix64(seed ^ (0xA0761D6478BD642Full + index * 0xE7037ED1A0B428DBull));
}

} // namespace gpoly
