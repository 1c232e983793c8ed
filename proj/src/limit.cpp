#include "chaos/limit.hpp"

#include <algorithm>

#include "chaos/errors.hpp"

namespace chaos {

namespace {

void require_unit(const Rational& x) {
    if (x < Rational(0) || x > Rational(1)) {
        throw DomainError("position " + x.str() + " outside [0, 1]");
    }
}

Rational round_down(const Rational& v, std::uint64_t bits) {
    const Rational scale = pow2(static_cast<long>(bits));
    return Rational((v * scale).floor(), 1) / scale;
}

Rational round_up(const Rational& v, std::uint64_t bits) {
    const Rational scale = pow2(static_cast<long>(bits));
    return Rational((v * scale).ceil(), 1) / scale;
}

constexpr std::uint64_t kMaxRefineBits = 1U << 20;

std::uint64_t bits_of(const Rational& r) {
    return std::max(r.num().bit_length(), r.den().bit_length());
}

}  // namespace

Rational diss_step(const Rational& x) {
    require_unit(x);
    return x * x;
}

Enclosure diss_iter_bounds(const Rational& x, std::uint64_t n, std::uint64_t precision_bits,
                           const std::optional<Rational>& stop_below) {
    require_unit(x);
    Enclosure e{x, x, true};
    for (std::uint64_t k = 0; k < n; ++k) {
        if (stop_below && e.hi <= *stop_below) {
            // Squaring on [0, 1] never increases the state.
            if (!e.exact || !e.lo.is_zero()) {
                e.lo = Rational(0);
                e.exact = false;
            }
            break;
        }
        if (e.exact) {
            Rational sq = e.lo * e.lo;
            if (sq == e.lo) {
                break;  // fixed point 0 or 1
            }
            if (sq.den().bit_length() <= kExactBitsCap) {
                e.lo = sq;
                e.hi = std::move(sq);
                continue;
            }
            e.lo = round_down(sq, precision_bits);
            e.hi = std::min(round_up(sq, precision_bits), Rational(1));
            e.exact = false;
            continue;
        }
        e.lo = round_down(e.lo * e.lo, precision_bits);
        e.hi = std::min(round_up(e.hi * e.hi, precision_bits), Rational(1));
    }
    return e;
}

Rational diss_iter_approx(const Rational& x, std::uint64_t n, const Rational& eps) {
    require_unit(x);
    if (eps <= Rational(0)) {
        throw DomainError("accuracy must be a positive rational, got " + eps.str());
    }
    // Each rounded squaring at most doubles the accumulated error, so about
    // n + log2(1/ε) bits suffice; retry with more if the guess falls short.
    std::uint64_t bits = n + bits_of(eps) + 32;
    for (;;) {
        const Enclosure e = diss_iter_bounds(x, n, bits, eps);
        if (e.exact) {
            return e.lo;
        }
        if (e.hi - e.lo <= Rational(2) * eps) {
            return (e.lo + e.hi) * Rational(1, 2);
        }
        bits *= 2;
    }
}

Rational limit_state(const Rational& x) {
    require_unit(x);
    return x == Rational(1) ? Rational(1) : Rational(0);
}

std::optional<std::uint64_t> first_below(const Rational& x, const Rational& threshold, std::uint64_t max_n) {
    require_unit(x);
    for (std::uint64_t n = 0; n <= max_n; ++n) {
        for (std::uint64_t bits = n + bits_of(threshold) + 64;; bits *= 2) {
            const Enclosure e = diss_iter_bounds(x, n, bits);
            if (e.hi < threshold) {
                return n;
            }
            if (e.lo >= threshold) {
                break;
            }
            if (e.exact || bits > kMaxRefineBits) {
                break;  // undecidable at this precision: treated as not below
            }
        }
    }
    return std::nullopt;
}

CRealFn diss_creal_fn(std::uint64_t n) {
    const Interval unit{Rational(0), Rational(1)};
    const Rational shrink = pow2(-static_cast<long>(n) - 1);
    return CRealFn{
        [unit, n](const Rational& eps, const Rational& q) {
            return diss_iter_approx(unit.clamp(q), n, eps * Rational(1, 2));
        },
        [shrink](const Rational& eps) { return eps * shrink; },
        unit,
    };
}

LimitWitness discontinuity_witness(const Rational& eta) {
    if (eta <= Rational(0)) {
        throw DomainError("eta must be positive, got " + eta.str());
    }
    const Rational offset = std::min(eta, Rational(1, 2));
    const Rational x = Rational(1) - offset;
    const Rational xp(1);
    return LimitWitness{x, xp, eta, abs(limit_state(x) - limit_state(xp))};
}

bool verify(const LimitWitness& w) {
    const auto in_unit = [](const Rational& v) { return Rational(0) <= v && v <= Rational(1); };
    if (!in_unit(w.x) || !in_unit(w.xp) || w.eta <= Rational(0)) {
        return false;
    }
    return abs(w.x - w.xp) <= w.eta && abs(limit_state(w.x) - limit_state(w.xp)) == w.gap &&
           w.gap >= Rational(1, 2);
}

}  // namespace chaos
