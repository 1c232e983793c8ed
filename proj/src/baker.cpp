#include "chaos/baker.hpp"

#include "chaos/errors.hpp"

namespace chaos {

namespace {

const Rational kHalf(1, 2);

bool in_unit(const Rational& x) {
    return Rational(0) <= x && x <= Rational(1);
}

void require_unit(const Rational& x, const char* what) {
    if (!in_unit(x)) {
        throw DomainError(std::string(what) + " " + x.str() + " outside [0, 1]");
    }
}

Rational step_unchecked(const Rational& x) {
    return x <= kHalf ? Rational(2) * x : Rational(2) - Rational(2) * x;
}

}  // namespace

Rational baker_step(const Rational& x) {
    require_unit(x, "baker_step argument");
    return step_unchecked(x);
}

Rational baker_iter(const Rational& x, std::uint64_t n) {
    require_unit(x, "baker_iter argument");
    Rational y = x;
    for (std::uint64_t k = 0; k < n; ++k) {
        y = step_unchecked(y);
    }
    return y;
}

CRealFn baker_creal_fn(std::uint64_t n) {
    const Interval unit{Rational(0), Rational(1)};
    const Rational shrink = pow2(-static_cast<long>(n));
    return CRealFn{
        [unit, n](const Rational&, const Rational& q) { return baker_iter(unit.clamp(q), n); },
        [shrink](const Rational& eps) { return eps * shrink; },
        unit,
    };
}

SensitivityWitness sensitivity_witness(const Rational& eta, const Rational& a, const Rational& ap) {
    if (eta <= Rational(0)) {
        throw DomainError("eta must be positive, got " + eta.str());
    }
    require_unit(a, "target a");
    require_unit(ap, "target a'");

    std::uint64_t n = 0;
    Rational scale(1);  // 1/2ⁿ
    while (scale > eta) {
        scale = scale * kHalf;
        ++n;
    }
    return SensitivityWitness{a * scale, ap * scale, n, eta, a, ap};
}

bool verify(const SensitivityWitness& w) {
    if (!(in_unit(w.x0) && in_unit(w.x0p) && in_unit(w.a) && in_unit(w.ap))) {
        return false;
    }
    if (w.eta <= Rational(0) || pow2(-static_cast<long>(w.n)) > w.eta) {
        return false;
    }
    return abs(w.x0 - w.x0p) <= w.eta && baker_iter(w.x0, w.n) == w.a && baker_iter(w.x0p, w.n) == w.ap;
}

}  // namespace chaos
