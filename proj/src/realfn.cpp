#include "chaos/realfn.hpp"

#include "chaos/errors.hpp"
#include "chaos/random.hpp"

namespace chaos {

CReal from_rational(const Rational& r) {
    return CReal{[r](const Rational&) { return r; }, r};
}

CRealFn identity_fn(Interval domain) {
    return CRealFn{
        [domain](const Rational&, const Rational& q) { return domain.clamp(q); },
        [](const Rational& eps) { return eps; },
        domain,
    };
}

CRealFn constant_fn(Rational value, Interval domain) {
    return CRealFn{
        [value](const Rational&, const Rational&) { return value; },
        [](const Rational& eps) { return eps; },
        std::move(domain),
    };
}

Rational apply(const CRealFn& f, const CReal& x, const Rational& eps) {
    if (eps <= Rational(0)) {
        throw DomainError("accuracy must be a positive rational, got " + eps.str());
    }
    if (x.exact && !f.domain.contains(*x.exact)) {
        throw DomainError("argument " + x.exact->str() + " outside the domain [" + f.domain.lo.str() + ", " +
                          f.domain.hi.str() + "]");
    }
    const Rational need = f.eta(eps);
    return f.G(eps, x.approx(need));
}

CRealFn compose(CRealFn f, CRealFn g) {
    Interval domain = g.domain;
    auto eta = [fe = f.eta, ge = g.eta](const Rational& eps) { return ge(fe(eps)); };
    auto G = [fG = std::move(f.G), fe = std::move(f.eta), gG = std::move(g.G)](const Rational& eps,
                                                                                 const Rational& q) {
        return fG(eps, gG(fe(eps), q));
    };
    return CRealFn{std::move(G), std::move(eta), std::move(domain)};
}

namespace {

std::vector<Rational> accuracy_pool() {
    std::vector<Rational> pool;
    for (long j = 1; j <= 6; ++j) {
        pool.push_back(Rational(1, pow10(static_cast<unsigned long>(j))));
    }
    for (long j = 1; j <= 16; ++j) {
        pool.push_back(pow2(-j));
    }
    pool.emplace_back(1);
    pool.push_back(Rational(1, 3));
    pool.push_back(Rational(7, 100));
    return pool;
}

// Endpoints, midpoint and dyadic subdivision points of the domain.
std::vector<Rational> adversarial_points(const Interval& dom) {
    std::vector<Rational> pts{dom.lo, dom.hi};
    const Rational width = dom.hi - dom.lo;
    for (long m = 1; m <= 7; ++m) {
        const Rational step = width * pow2(-m);
        for (long k = 1; k < (1L << m); k += 2) {
            pts.push_back(dom.lo + step * Rational(k));
        }
    }
    return pts;
}

Rational random_fraction(Rng& rng) {
    return Rational(mpz_class(static_cast<unsigned long>(rng.below(1000001))), mpz_class(1000000));
}

}  // namespace

ModulusReport check_modulus(const CRealFn& f, const std::function<Rational(const Rational&)>& oracle,
                            std::uint64_t trials, std::uint64_t seed) {
    Rng rng(seed);
    const std::vector<Rational> eps_pool = accuracy_pool();
    const std::vector<Rational> adversarial = adversarial_points(f.domain);
    const Rational width = f.domain.hi - f.domain.lo;

    ModulusReport report;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rational eps = eps_pool[rng.below(eps_pool.size())];
        if (rng.below(4) == 0) {
            eps = Rational(1, mpz_class(static_cast<unsigned long>(rng.between(1, 100000))));
        }
        const Rational eta = f.eta(eps);

        Rational x;
        switch (t % 4) {
        case 0:
            x = adversarial[(t / 4) % adversarial.size()];
            break;
        case 1: {
            // Neighbours of adversarial points, one modulus away.
            const Rational& a = adversarial[rng.below(adversarial.size())];
            x = f.domain.clamp(rng.coin() ? a + eta : a - eta);
            break;
        }
        case 2:
            x = f.domain.lo + width * random_fraction(rng);
            break;
        default: {
            const long m = static_cast<long>(rng.between(1, 20));
            const auto k = rng.below((1ULL << m) + 1);
            x = f.domain.lo + width * Rational(mpz_class(static_cast<unsigned long>(k)), 1) * pow2(-m);
            break;
        }
        }

        Rational offset;
        switch (rng.below(4)) {
        case 0:
            offset = Rational(0);
            break;
        case 1:
            offset = eta;
            break;
        case 2:
            offset = -eta;
            break;
        default:
            offset = eta * random_fraction(rng);
            if (rng.coin()) {
                offset = -offset;
            }
            break;
        }
        const Rational q = x + offset;

        const Rational exact = oracle(x);
        const Rational approx = f.G(eps, q);
        if (abs(exact - approx) > eps) {
            report.counterexamples.push_back({eps, x, q, exact, approx});
        }
        ++report.trials;
    }
    return report;
}

}  // namespace chaos
