#pragma once

#include <cstdint>
#include <random>

#include "rational.hpp"

namespace lndkit {

// Deterministic RNG built on raw mt19937_64 draws. The standard distribution
// objects are implementation-defined, so reproducible streams across
// compilers need the modulo construction below.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    // uniform in [0, n)
    uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }

    // uniform integer in [lo, hi], inclusive
    long range(long lo, long hi) {
        if (hi <= lo) return lo;
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool chance(uint64_t num, uint64_t den) { return below(den) < num; }

    // numerator in [lo, hi], denominator in [1, den_hi]
    Rat rational(long lo, long hi, long den_hi = 1) {
        long num = range(lo, hi);
        long den = den_hi <= 1 ? 1 : range(1, den_hi);
        return rat(num, den);
    }

    // nonzero numerator variant
    Rat nonzero_rational(long lo, long hi, long den_hi = 1) {
        long num = 0;
        while (num == 0) num = range(lo, hi);
        long den = den_hi <= 1 ? 1 : range(1, den_hi);
        return rat(num, den);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace lndkit
