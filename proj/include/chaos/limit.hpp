#pragma once

#include <cstdint>
#include <optional>

#include "chaos/numbers.hpp"
#include "chaos/realfn.hpp"

namespace chaos {

// The dissipative instance x ↦ x² on [0, 1]. Every orbit converges: to 0
// from x < 1, and 1 stays put. Its limit map is therefore the step function
// L(x) = [x = 1], discontinuous at 1, while each finite-date state x^(2^n)
// remains a computable real function of x.

/// Exact x². Throws DomainError outside [0, 1].
Rational diss_step(const Rational& x);

/// Denominator size, in bits, past which exact squaring gives way to
/// rounded bounds.
inline constexpr std::size_t kExactBitsCap = 4096;

/// Enclosure lo ≤ x^(2^n) ≤ hi. `exact` is set when lo == hi was obtained
/// without rounding.
struct Enclosure {
    Rational lo;
    Rational hi;
    bool exact = false;
};

/// Encloses x^(2^n): squares exactly while the denominator stays below
/// kExactBitsCap bits, then squares dyadic lower/upper bounds rounded to
/// `precision_bits`. Stops early once hi ≤ `stop_below` (when given), since
/// later states only shrink.
Enclosure diss_iter_bounds(const Rational& x, std::uint64_t n, std::uint64_t precision_bits,
                           const std::optional<Rational>& stop_below = std::nullopt);

/// A rational within ε of x^(2^n). Throws DomainError when x ∉ [0, 1] or
/// ε ≤ 0.
Rational diss_iter_approx(const Rational& x, std::uint64_t n, const Rational& eps);

/// Limit of the orbit: 0 for x < 1, 1 for x = 1.
Rational limit_state(const Rational& x);

/// Least n with x^(2^n) < threshold, decided from enclosures refined until
/// they separate from the threshold. nullopt when no n ≤ max_n qualifies.
std::optional<std::uint64_t> first_below(const Rational& x, const Rational& threshold, std::uint64_t max_n);

/// x ↦ x^(2^n) as a computable real function on [0, 1]. Each squaring is
/// 2-Lipschitz on [0, 1], so eta(ε) = ε/2^(n+1) leaves half of ε for the
/// approximation error of G.
CRealFn diss_creal_fn(std::uint64_t n);

/// Two points at most eta apart whose limit states differ by `gap`.
struct LimitWitness {
    Rational x;
    Rational xp;
    Rational eta;
    Rational gap;
};

/// x = 1 − min(eta, 1/2), xp = 1. Throws DomainError when eta ≤ 0.
LimitWitness discontinuity_witness(const Rational& eta);

bool verify(const LimitWitness& w);

}  // namespace chaos
