#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "chaos/numbers.hpp"

namespace chaos {

/// Closed interval [lo, hi] with rational endpoints.
struct Interval {
    Rational lo;
    Rational hi;

    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    Rational clamp(const Rational& x) const { return chaos::clamp(x, lo, hi); }
};

/// A computable real: a rule returning a rational within ε of the denoted
/// real for every positive rational ε.
struct CReal {
    std::function<Rational(const Rational& eps)> approx;
    /// When set, approx(ε) == *exact for all ε.
    std::optional<Rational> exact;
};

CReal from_rational(const Rational& r);

/// A computable real function g on `domain`, given by an approximation rule
/// `G` and a modulus `eta`:
///
///   x ∈ domain, |x − q| ≤ eta(ε)  ⇒  |g(x) − G(ε, q)| ≤ ε.
///
/// `q` may fall slightly outside the domain; shipped rules clamp it first.
struct CRealFn {
    std::function<Rational(const Rational& eps, const Rational& q)> G;
    std::function<Rational(const Rational& eps)> eta;
    Interval domain;
};

/// The identity on `domain`, with eta(ε) = ε.
CRealFn identity_fn(Interval domain);
/// The constant function on `domain`, with eta(ε) = ε.
CRealFn constant_fn(Rational value, Interval domain);

/// G(ε, x.approx(eta(ε))). Throws DomainError when ε ≤ 0 or when x has an
/// exact value outside f.domain.
Rational apply(const CRealFn& f, const CReal& x, const Rational& eps);

/// f ∘ g with eta(ε) = eta_g(eta_f(ε)) and G(ε, q) = G_f(ε, G_g(eta_f(ε), q)).
/// The caller guarantees that g maps its domain into f.domain.
CRealFn compose(CRealFn f, CRealFn g);

struct ModulusCounterexample {
    Rational eps;
    Rational x;
    Rational q;
    Rational exact;   // g(x)
    Rational approx;  // G(eps, q)
};

struct ModulusReport {
    std::uint64_t trials = 0;
    std::vector<ModulusCounterexample> counterexamples;

    bool passed() const { return counterexamples.empty(); }
};

/// Samples `trials` triples (ε, x, q) with x a rational in f.domain and
/// |x − q| ≤ eta(ε), and checks the modulus implication against the exact
/// oracle g with exact comparison. Points are drawn from a fixed adversarial
/// set (domain endpoints, the midpoint, dyadic points and their neighbours)
/// and from a seeded pseudo-random stream. Deterministic given the seed.
ModulusReport check_modulus(const CRealFn& f, const std::function<Rational(const Rational&)>& oracle,
                            std::uint64_t trials, std::uint64_t seed);

}  // namespace chaos
