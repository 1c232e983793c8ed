#pragma once

#include <cstdint>
#include <random>

#include "chaos/numbers.hpp"

namespace chaos {

// Seeded generator used by every sampler in the library. Bounded draws use
// rejection on the raw 64-bit stream so sequences are identical across
// standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v = 0;
        do {
            v = engine_();
        } while (v >= limit);
        return v % bound;
    }

    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

    bool coin() { return (engine_() >> 63) != 0; }

    /// Rational k/den in [0, 1] with den drawn from [1, max_den].
    Rational unit_rational(std::uint64_t max_den) {
        const auto den = between(1, max_den);
        const auto num = between(0, den);
        return Rational(mpz_class(static_cast<unsigned long>(num)), mpz_class(static_cast<unsigned long>(den)));
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace chaos
