// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chaos/baker.hpp"
#include "chaos/corpus.hpp"
#include "chaos/discrete.hpp"
#include "chaos/encoding.hpp"
#include "chaos/limit.hpp"
#include "chaos/measured.hpp"
#include "chaos/murec.hpp"
#include "chaos/random.hpp"
#include "chaos/realfn.hpp"
#include "oracles.hpp"

using namespace chaos;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) {
            detail = why;
        }
        ok = false;
    }
};

mpq_class q(const Rational& r) { return r.value(); }

Rational r(const mpq_class& v) { return Rational(v); }

Rational random_rational(Rng& rng) {
    const auto bound = std::uint64_t{1} << (1 + rng.below(62));
    const mpz_class num = static_cast<unsigned long>(rng.below(bound));
    const mpz_class den = static_cast<unsigned long>(rng.between(1, bound));
    Rational x(num, den);
    return rng.coin() ? -x : x;
}

Outcome encoding_round_trip() {
    Outcome o;
    Rng rng(1);
    for (int t = 0; t < 10000; ++t) {
        const Rational x = random_rational(rng);
        for (EncodingId e : {EncodingId::canonical, EncodingId::alternative}) {
            if (!(decode_rational(encode_rational(x, e), e) == x)) {
                o.fail("round trip lost " + x.str() + " under " + std::string(to_string(e)));
            }
        }
    }
    const auto walk = oracle::cantor_walk(10000);
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    for (std::uint64_t c = 0; c < walk.size(); ++c) {
        const auto [n, p] = unpair(Natural(c));
        const std::pair<std::uint64_t, std::uint64_t> got{n.to_u64(), p.to_u64()};
        if (got != walk[c] || !(pair(n, p) == Natural(c)) || !seen.insert(got).second) {
            o.fail("pairing disagrees at code " + std::to_string(c));
        }
    }
    return o;
}

Outcome murec_equivalence() {
    Outcome o;
    const std::string dir = CHAOS_PROGRAMS_DIR;
    const std::vector<std::pair<std::string, RecFn>> adders = {{"add builder", corpus::addition()},
                                                               {"add.rec", load_program(dir + "/add.rec")}};
    const std::vector<std::pair<std::string, RecFn>> multipliers = {
        {"mul builder", corpus::multiplication()}, {"mul.rec", load_program(dir + "/mul.rec")}};
    const Natural fuel(100000000);
    for (std::uint64_t a = 0; a <= 50; ++a) {
        for (std::uint64_t b = 0; b <= 50; ++b) {
            for (const auto& [name, t] : adders) {
                const auto v = eval(t, {Natural(a), Natural(b)}, fuel);
                if (!is_value(v) || !(std::get<Natural>(v) == Natural(a + b))) {
                    o.fail(name + " wrong at " + std::to_string(a) + "," + std::to_string(b));
                }
            }
            for (const auto& [name, t] : multipliers) {
                const auto v = eval(t, {Natural(a), Natural(b)}, fuel);
                if (!is_value(v) || !(std::get<Natural>(v) == Natural(a * b))) {
                    o.fail(name + " wrong at " + std::to_string(a) + "," + std::to_string(b));
                }
            }
        }
    }
    const RecFn never = RecFn::mu(RecFn::comp(RecFn::succ(), {RecFn::proj(2, 2)}));
    for (std::uint64_t f : {1000ULL, 1000000ULL}) {
        const auto v = eval(never, {Natural(0)}, Natural(f));
        if (is_value(v)) {
            o.fail("search without a zero returned a value at fuel " + std::to_string(f));
        }
    }
    return o;
}

Outcome modulus_certification() {
    Outcome o;
    for (std::uint64_t n = 1; n <= 10; ++n) {
        const CRealFn f = baker_creal_fn(n);
        const auto exact = [n](const Rational& x) { return baker_iter(x, n); };
        const ModulusReport rep = check_modulus(f, exact, 2000, n);
        if (rep.trials < 1000 || !rep.passed()) {
            o.fail("sampler found a counterexample for n=" + std::to_string(n));
        }
        // Every breakpoint of the iterate and its neighbours at distance eta.
        for (const Rational eps : {Rational(1, 10), Rational(1, 1000), Rational(1, 3)}) {
            const Rational eta = f.eta(eps);
            if (!(eta == eps * pow2(-static_cast<long>(n)))) {
                o.fail("modulus is not eps/2^n for n=" + std::to_string(n));
            }
            const std::uint64_t den = std::uint64_t{1} << n;
            for (std::uint64_t k = 0; k <= den; ++k) {
                mpq_class x(static_cast<unsigned long>(k), static_cast<unsigned long>(den));
                x.canonicalize();
                const mpq_class gx = oracle::tent_iter(x, n);
                for (const mpq_class& qq : {mpq_class(x - q(eta)), x, mpq_class(x + q(eta))}) {
                    const mpq_class got = q(f.G(eps, r(qq)));
                    if (abs(mpq_class(gx - got)) > q(eps)) {
                        o.fail("breakpoint counterexample for n=" + std::to_string(n));
                    }
                }
            }
        }
    }
    CRealFn wrong = baker_creal_fn(2);
    wrong.eta = [](const Rational& eps) { return eps; };
    const ModulusReport rep = check_modulus(wrong, [](const Rational& x) { return baker_iter(x, 2); }, 2000, 2);
    if (rep.passed()) {
        o.fail("the modulus eta = eps was not refuted for n=2");
    }
    return o;
}

Outcome sensitivity() {
    Outcome o;
    Rng rng(4);
    for (int t = 0; t < 100; ++t) {
        const Rational eta(mpz_class(1), mpz_class(static_cast<unsigned long>(rng.between(1, 1000000))));
        const Rational a = rng.unit_rational(1000);
        const Rational ap = rng.unit_rational(1000);
        const SensitivityWitness w = sensitivity_witness(eta, a, ap);
        const bool close = abs(w.x0 - w.x0p) <= eta;
        const bool hits = oracle::tent_iter(q(w.x0), w.n) == q(a) && oracle::tent_iter(q(w.x0p), w.n) == q(ap);
        if (!close || !hits || !verify(w)) {
            o.fail("invalid witness for eta=" + eta.str() + " a=" + a.str() + " ap=" + ap.str());
        }
    }
    const Rational eta(mpz_class(1), mpz_class(1000000));
    const SensitivityWitness w = sensitivity_witness(eta, 0, 1);
    const mpq_class sep = abs(mpq_class(oracle::tent_iter(q(w.x0), w.n) - oracle::tent_iter(q(w.x0p), w.n)));
    if (sep != 1 || abs(w.x0 - w.x0p) > eta) {
        o.fail("a=0, ap=1 did not separate by exactly 1");
    }
    return o;
}

Outcome grid_equivalence() {
    Outcome o;
    for (std::uint64_t N = 1; N <= 100; ++N) {
        for (std::uint64_t i = 0; i <= N; ++i) {
            mpq_class x(static_cast<unsigned long>(i), static_cast<unsigned long>(N));
            x.canonicalize();
            GridState s{N, i};
            Rational y = s.position();
            for (std::uint64_t n = 1; n <= 20; ++n) {
                s = grid_step(s);
                x = oracle::tent(x);
                y = baker_step(y);
                if (s.position().value() != x || !(y == s.position()) || !(grid_iter(GridState{N, i}, n) == s)) {
                    o.fail("grid diverges from exact orbit at N=" + std::to_string(N) + " i=" + std::to_string(i));
                }
            }
        }
        const Rational eta = min_separation_eta(N);
        for (std::uint64_t i = 0; i <= N; ++i) {
            for (std::uint64_t j = 0; j <= N; ++j) {
                const bool near = abs(GridState{N, i}.position() - GridState{N, j}.position()) <= eta;
                if (near != (i == j)) {
                    o.fail("collapse fails at N=" + std::to_string(N));
                }
            }
        }
    }
    return o;
}

Outcome measured_relation() {
    Outcome o;
    for (unsigned d = 1; d <= 3; ++d) {
        const std::uint64_t S = oracle::ten_pow(d);
        for (std::uint64_t k = 0; k <= S; ++k) {
            const Readout m{d, k};
            const SuccessorSet got = successors(m);
            const std::set<std::uint64_t> brute = oracle::sampled_successors(k, d, 1000);
            if (std::set<std::uint64_t>(got.members.begin(), got.members.end()) != brute) {
                o.fail("successor set mismatch at " + m.str());
            }
            const auto ws = successor_witnesses(m);
            if (ws.size() != got.members.size()) {
                o.fail("witness count mismatch at " + m.str());
            }
            const Span c = cell(m);
            for (std::size_t j = 0; j < ws.size() && j < got.members.size(); ++j) {
                const bool inside = c.contains(ws[j].x);
                if (ws[j].k != got.members[j] || !inside ||
                    oracle::truncate(oracle::tent(q(ws[j].x)), d) != ws[j].k) {
                    o.fail("bad witness at " + m.str());
                }
            }
        }
    }
    const SuccessorSet origin = successors(parse_readout("0.000", 3));
    if (origin.members != std::vector<std::uint64_t>{0, 1}) {
        o.fail("cell 0.000 at d=3 does not give {0.000, 0.001}");
    }
    for (unsigned d = 1; d <= 3; ++d) {
        const auto table = relation_table(d);
        const std::uint64_t S = oracle::ten_pow(d);
        for (std::uint64_t k = 0; k <= S; ++k) {
            std::set<std::uint64_t> frontier{k};
            for (std::uint64_t n = 0; n <= 6; ++n) {
                const SuccessorSet got = reach_n(Readout{d, k}, n);
                if (std::set<std::uint64_t>(got.members.begin(), got.members.end()) != frontier) {
                    o.fail("reach_n recurrence fails at " + Readout{d, k}.str() + " n=" + std::to_string(n));
                }
                std::set<std::uint64_t> next;
                for (std::uint64_t j : frontier) {
                    next.insert(table[j].second.members.begin(), table[j].second.members.end());
                }
                frontier = std::move(next);
            }
        }
    }
    return o;
}

Outcome limit_module() {
    Outcome o;
    Rational eta(1, 10);
    for (int j = 1; j <= 6; ++j) {
        const LimitWitness w = discontinuity_witness(eta);
        const bool close = abs(w.x - w.xp) <= eta;
        const Rational gap = abs(limit_state(w.x) - limit_state(w.xp));
        if (!close || !(gap == 1) || !(w.gap == 1) || !verify(w)) {
            o.fail("witness gap is not 1 at eta=" + eta.str());
        }
        eta *= Rational(1, 10);
    }
    const auto n = first_below(Rational(9, 10), Rational(1, 1000), 64);
    if (!n || *n != 7) {
        o.fail("first_below(9/10, 1/1000) is not 7");
    }
    // 9^(2^k) · 1000 against 10^(2^k), in integers.
    mpz_class nine = 9;
    mpz_class ten = 10;
    for (int k = 0; k <= 7; ++k) {
        const bool below = nine * 1000 < ten;
        if (below != (k == 7)) {
            o.fail("exact powers disagree at n=" + std::to_string(k));
        }
        nine *= nine;
        ten *= ten;
    }
    return o;
}

std::string run_cli(const std::string& args) {
    const std::string cmd = std::string(CHAOSCTL) + " " + args;
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (p == nullptr) {
        return out;
    }
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) {
        out.append(buf, got);
    }
    pclose(p);
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome cli_golden() {
    Outcome o;
    const std::string dir = GOLDEN_DIR;
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"encode.txt", "--seed 0 encode --rational 1/2"},
        {"sensitivity.txt", "--seed 0 sensitivity --eta 1/10 --a 1/3 --ap 1"},
        {"measured_succ.txt", "--seed 0 measured-succ --d 3 --readout 0.000"},
    };
    for (const auto& [file, args] : cases) {
        const std::string expected = slurp(dir + "/" + file);
        if (expected.empty() || run_cli(args) != expected) {
            o.fail(file + " does not match");
        }
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 encoding round trip and pairing bijectivity", encoding_round_trip},
        {"2 mu-recursive terms match machine arithmetic", murec_equivalence},
        {"3 baker modulus certification", modulus_certification},
        {"4 sensitivity witnesses", sensitivity},
        {"5 grid equivalence and collapse", grid_equivalence},
        {"6 measured successor relation", measured_relation},
        {"7 limit discontinuity and first_below", limit_module},
        {"8 CLI golden output", cli_golden},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", name.c_str(), secs,
                    o.ok ? "" : ": ", o.detail.c_str());
        failed += o.ok ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
