#include "chaos/selfcheck.hpp"

#include <functional>
#include <set>

#include "chaos/baker.hpp"
#include "chaos/corpus.hpp"
#include "chaos/discrete.hpp"
#include "chaos/encoding.hpp"
#include "chaos/errors.hpp"
#include "chaos/limit.hpp"
#include "chaos/measured.hpp"
#include "chaos/murec.hpp"
#include "chaos/random.hpp"
#include "chaos/realfn.hpp"

namespace chaos {

namespace {

using Check = std::function<std::string()>;

Rational random_rational(Rng& rng) {
    const auto num = rng.below(1000000);
    const auto den = rng.between(1, 1000000);
    Rational r(mpz_class(static_cast<unsigned long>(num)), mpz_class(static_cast<unsigned long>(den)));
    return rng.coin() ? -r : r;
}

std::string encoding_bijectivity() {
    for (std::uint64_t c = 0; c < 10000; ++c) {
        auto [n, p] = unpair(c);
        if (pair(n, p) != Natural(c)) {
            return "pair(unpair(" + std::to_string(c) + ")) differs";
        }
    }
    for (std::uint64_t n = 0; n < 100; ++n) {
        for (std::uint64_t p = 0; p < 100; ++p) {
            if (unpair(pair(n, p)) != std::pair<Natural, Natural>{n, p}) {
                return "unpair(pair(" + std::to_string(n) + ", " + std::to_string(p) + ")) differs";
            }
        }
    }
    return {};
}

std::string encoding_round_trip(std::uint64_t seed) {
    Rng rng(seed);
    for (int t = 0; t < 10000; ++t) {
        const Rational r = random_rational(rng);
        for (EncodingId e : {EncodingId::canonical, EncodingId::alternative}) {
            if (decode_rational(encode_rational(r, e), e) != r) {
                return "round trip failed for " + r.str();
            }
        }
    }
    return {};
}

std::string encoding_injectivity(std::uint64_t seed) {
    Rng rng(seed + 1);
    std::set<std::string> rationals;
    while (rationals.size() < 1000) {
        rationals.insert(random_rational(rng).str());
    }
    for (EncodingId e : {EncodingId::canonical, EncodingId::alternative}) {
        std::set<std::string> codes;
        for (const std::string& r : rationals) {
            codes.insert(encode_rational(Rational::parse(r), e).str());
        }
        if (codes.size() != rationals.size()) {
            return std::string("collision under ") + std::string(to_string(e));
        }
    }
    return {};
}

std::string encoding_translation() {
    for (std::uint64_t c = 0; c < 10000; ++c) {
        for (EncodingId a : {EncodingId::canonical, EncodingId::alternative}) {
            Rational r;
            try {
                r = decode_rational(c, a);
            } catch (const NotACode&) {
                continue;
            }
            for (EncodingId b : {EncodingId::canonical, EncodingId::alternative}) {
                if (decode_rational(translate(c, a, b), b) != r) {
                    return "translation of " + std::to_string(c) + " incoherent";
                }
            }
        }
    }
    return {};
}

std::string murec_arithmetic() {
    const RecFn add = corpus::addition();
    const RecFn mul = corpus::multiplication();
    for (std::uint64_t x = 0; x <= 50; ++x) {
        for (std::uint64_t y = 0; y <= 50; ++y) {
            if (eval(add, {x, y}, 1000000) != EvalOutcome{Natural(x + y)}) {
                return "add(" + std::to_string(x) + ", " + std::to_string(y) + ") wrong";
            }
            if (eval(mul, {x, y}, 1000000) != EvalOutcome{Natural(x * y)}) {
                return "mul(" + std::to_string(x) + ", " + std::to_string(y) + ") wrong";
            }
        }
    }
    return {};
}

std::string murec_divergence() {
    const RecFn never = RecFn::mu(RecFn::comp(RecFn::succ(), {RecFn::proj(2, 2)}));
    for (std::uint64_t fuel : {1000ULL, 1000000ULL}) {
        if (eval(never, {0}, fuel) != EvalOutcome{Diverged{fuel}}) {
            return "mu of succ did not exhaust fuel " + std::to_string(fuel);
        }
    }
    return {};
}

std::string murec_minimality() {
    // body(x, y) = monus(x, y): least zero at y = x.
    const RecFn body = corpus::truncated_subtraction();
    const RecFn m = RecFn::mu(body);
    for (std::uint64_t x = 0; x <= 20; ++x) {
        const EvalOutcome out = eval(m, {x}, 1000000);
        if (!is_value(out)) {
            return "mu diverged at " + std::to_string(x);
        }
        const std::uint64_t y = std::get<Natural>(out).to_u64();
        for (std::uint64_t z = 0; z <= y; ++z) {
            const EvalOutcome v = eval(body, {x, z}, 1000000);
            if (!is_value(v) || (std::get<Natural>(v).is_zero() != (z == y))) {
                return "mu result " + std::to_string(y) + " not minimal at x = " + std::to_string(x);
            }
        }
    }
    return {};
}

std::string murec_fuel_monotone() {
    const RecFn mul = corpus::multiplication();
    std::uint64_t enough = 1;
    while (!is_value(eval(mul, {7, 9}, enough))) {
        ++enough;
    }
    for (std::uint64_t k = enough; k < enough + 50; ++k) {
        if (eval(mul, {7, 9}, k) != EvalOutcome{Natural(63)}) {
            return "value changed at fuel " + std::to_string(k);
        }
    }
    return {};
}

std::string baker_modulus(std::uint64_t seed) {
    for (std::uint64_t n = 1; n <= 10; ++n) {
        const ModulusReport rep =
            check_modulus(baker_creal_fn(n), [n](const Rational& x) { return baker_iter(x, n); }, 1000, seed + n);
        if (!rep.passed()) {
            return "counterexample for n = " + std::to_string(n);
        }
    }
    CRealFn wrong = baker_creal_fn(2);
    wrong.eta = [](const Rational& eps) { return eps; };
    if (check_modulus(wrong, [](const Rational& x) { return baker_iter(x, 2); }, 1000, seed).passed()) {
        return "wrong modulus eta(eps) = eps was not refuted";
    }
    return {};
}

std::string baker_lipschitz(std::uint64_t seed) {
    Rng rng(seed + 2);
    for (int t = 0; t < 500; ++t) {
        const Rational x = rng.unit_rational(10000);
        const Rational y = rng.unit_rational(10000);
        for (std::uint64_t n = 0; n <= 12; ++n) {
            if (abs(baker_iter(x, n) - baker_iter(y, n)) > pow2(static_cast<long>(n)) * abs(x - y)) {
                return "Lipschitz bound fails at " + x.str() + ", " + y.str();
            }
        }
    }
    return {};
}

std::string baker_witnesses(std::uint64_t seed) {
    Rng rng(seed + 3);
    for (int t = 0; t < 100; ++t) {
        const Rational eta(mpz_class(1), mpz_class(static_cast<unsigned long>(rng.between(1, 1000000))));
        const SensitivityWitness w = sensitivity_witness(eta, rng.unit_rational(1000), rng.unit_rational(1000));
        if (!verify(w)) {
            return "invalid witness for eta = " + eta.str();
        }
    }
    const SensitivityWitness far = sensitivity_witness(Rational(1, 1000000), Rational(0), Rational(1));
    if (!verify(far) || abs(baker_iter(far.x0, far.n) - baker_iter(far.x0p, far.n)) != Rational(1)) {
        return "expansion witness does not separate to 1";
    }
    return {};
}

std::string discrete_exactness() {
    for (std::uint64_t N = 1; N <= 100; ++N) {
        for (std::uint64_t i = 0; i <= N; ++i) {
            const GridState s{N, i};
            if (grid_step(s).position() != baker_step(s.position())) {
                return "grid step disagrees at " + std::to_string(i) + "/" + std::to_string(N);
            }
        }
    }
    return {};
}

std::string discrete_collapse() {
    for (std::uint64_t N = 1; N <= 100; ++N) {
        const Rational eta = min_separation_eta(N);
        for (std::uint64_t i = 0; i <= N; ++i) {
            for (std::uint64_t j = 0; j <= N; ++j) {
                const bool close = abs(GridState{N, i}.position() - GridState{N, j}.position()) <= eta;
                if (close != (i == j)) {
                    return "collapse fails for N = " + std::to_string(N);
                }
            }
        }
    }
    return {};
}

std::string discrete_periodicity() {
    for (std::uint64_t N = 1; N <= 100; ++N) {
        for (std::uint64_t i = 0; i <= N; ++i) {
            const GridCycle c = find_cycle({N, i});
            if (c.entry + c.length > N + 2 || c.length == 0) {
                return "orbit of " + std::to_string(i) + "/" + std::to_string(N) + " too long";
            }
        }
    }
    return {};
}

std::string measured_soundness(std::uint64_t seed) {
    Rng rng(seed + 4);
    for (unsigned d = 1; d <= 2; ++d) {
        for (const auto& [k, succ] : relation_table(d)) {
            const Span c = cell(Readout{d, k});
            const Rational width = c.hi - c.lo;
            for (int t = 0; t < 200; ++t) {
                const Rational x =
                    c.lo + width * Rational(mpz_class(static_cast<unsigned long>(rng.below(1000000))), 1000000);
                if (!succ.contains(measure(baker_step(x), d).k)) {
                    return "missing successor of " + Readout{d, k}.str();
                }
            }
        }
    }
    return {};
}

std::string measured_witnesses() {
    for (unsigned d = 1; d <= 3; ++d) {
        for (const auto& [k, succ] : relation_table(d)) {
            const Readout m{d, k};
            const auto ws = successor_witnesses(m);
            if (ws.size() != succ.members.size()) {
                return "witness count mismatch at " + m.str();
            }
            for (const SuccessorWitness& w : ws) {
                if (!cell(m).contains(w.x) || measure(baker_step(w.x), d).k != w.k) {
                    return "bad witness at " + m.str();
                }
            }
        }
    }
    return {};
}

std::string measured_origin_cell() {
    const SuccessorSet s = successors(Readout{3, 0});
    if (s.members != std::vector<std::uint64_t>{0, 1}) {
        return "0.000 does not lead to exactly {0.000, 0.001}";
    }
    return {};
}

std::string measured_recurrence() {
    for (std::uint64_t k : {0ULL, 1ULL, 333ULL, 500ULL, 999ULL, 1000ULL}) {
        const Readout m{3, k};
        for (std::uint64_t n = 0; n < 6; ++n) {
            std::set<std::uint64_t> expected;
            for (std::uint64_t j : reach_n(m, n).members) {
                const auto s = successors(Readout{3, j});
                expected.insert(s.members.begin(), s.members.end());
            }
            const auto got = reach_n(m, n + 1).members;
            if (std::vector<std::uint64_t>(expected.begin(), expected.end()) != got) {
                return "recurrence fails from " + m.str() + " at n = " + std::to_string(n + 1);
            }
        }
    }
    return {};
}

std::string limit_witnesses() {
    Rational eta(1, 10);
    for (int j = 1; j <= 6; ++j) {
        const LimitWitness w = discontinuity_witness(eta);
        if (!verify(w) || w.gap != Rational(1)) {
            return "witness fails at eta = " + eta.str();
        }
        eta = eta * Rational(1, 10);
    }
    return {};
}

std::string limit_first_below() {
    const auto n = first_below(Rational(9, 10), Rational(1, 1000), 20);
    if (!n || *n != 7) {
        return "(9/10)^(2^n) does not first drop below 1/1000 at n = 7";
    }
    return {};
}

std::string limit_finite_dates(std::uint64_t seed) {
    for (std::uint64_t n = 0; n <= 6; ++n) {
        const auto oracle = [n](const Rational& x) {
            Rational y = x;
            for (std::uint64_t k = 0; k < n; ++k) {
                y = y * y;
            }
            return y;
        };
        if (!check_modulus(diss_creal_fn(n), oracle, 200, seed + 10 + n).passed()) {
            return "finite-date modulus fails at n = " + std::to_string(n);
        }
    }
    return {};
}

}  // namespace

std::vector<PropertyResult> run_self_check(std::uint64_t seed) {
    const std::vector<std::tuple<std::string, std::string, Check>> suite{
        {"encoding", "pairing bijectivity window", encoding_bijectivity},
        {"encoding", "rational round trip", [seed] { return encoding_round_trip(seed); }},
        {"encoding", "injectivity sample", [seed] { return encoding_injectivity(seed); }},
        {"encoding", "translation coherence", encoding_translation},
        {"murec", "oracle equivalence", murec_arithmetic},
        {"murec", "divergence under fuel", murec_divergence},
        {"murec", "minimality of mu", murec_minimality},
        {"murec", "fuel monotonicity", murec_fuel_monotone},
        {"baker", "modulus certification", [seed] { return baker_modulus(seed); }},
        {"baker", "iterate Lipschitz bound", [seed] { return baker_lipschitz(seed); }},
        {"baker", "sensitivity witnesses", [seed] { return baker_witnesses(seed); }},
        {"discrete", "grid exactness", discrete_exactness},
        {"discrete", "sensitivity collapse", discrete_collapse},
        {"discrete", "eventual periodicity", discrete_periodicity},
        {"measured", "sampled soundness", [seed] { return measured_soundness(seed); }},
        {"measured", "witness completeness", measured_witnesses},
        {"measured", "nondeterministic cell 0.000", measured_origin_cell},
        {"measured", "reachability recurrence", measured_recurrence},
        {"limit", "discontinuity witnesses", limit_witnesses},
        {"limit", "convergence threshold", limit_first_below},
        {"limit", "finite-date modulus", [seed] { return limit_finite_dates(seed); }},
    };

    std::vector<PropertyResult> results;
    for (const auto& [module, name, check] : suite) {
        PropertyResult r{module, name, false, {}};
        try {
            r.detail = check();
            r.passed = r.detail.empty();
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace chaos
