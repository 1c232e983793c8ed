#pragma once

#include <cstdint>

#include "chaos/numbers.hpp"
#include "chaos/realfn.hpp"

namespace chaos {

/// One step of the baker's transformation on [0, 1]:
/// 2x for x ≤ 1/2, 2 − 2x for x > 1/2. Throws DomainError outside [0, 1].
Rational baker_step(const Rational& x);

/// n-fold iterate of baker_step.
Rational baker_iter(const Rational& x, std::uint64_t n);

/// x ↦ bⁿ(x) as a computable real function on [0, 1] with modulus
/// eta(ε) = ε / 2ⁿ. bⁿ is 2ⁿ-Lipschitz, so this modulus is exact enough.
CRealFn baker_creal_fn(std::uint64_t n);

/// Two starting points at most `eta` apart whose orbits land on prescribed
/// targets `a` and `ap` after n steps.
struct SensitivityWitness {
    Rational x0;
    Rational x0p;
    std::uint64_t n = 0;
    Rational eta;
    Rational a;
    Rational ap;
};

/// n is the least natural with 1/2ⁿ ≤ eta; x0 = a/2ⁿ, x0p = ap/2ⁿ.
/// Throws DomainError when eta ≤ 0 or a target is outside [0, 1].
SensitivityWitness sensitivity_witness(const Rational& eta, const Rational& a, const Rational& ap);

/// Re-checks every witness condition by exact arithmetic.
bool verify(const SensitivityWitness& w);

}  // namespace chaos
