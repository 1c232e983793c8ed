#include <doctest.h>

#include <set>

#include "chaos/baker.hpp"
#include "chaos/errors.hpp"
#include "chaos/measured.hpp"
#include "chaos/random.hpp"
#include "oracles.hpp"

using namespace chaos;

namespace {

std::vector<std::uint64_t> members(const SuccessorSet& s) {
    return s.members;
}

}  // namespace

TEST_CASE("measure truncates") {
    CHECK(measure(Rational(49, 100000), 3) == Readout{3, 0});
    CHECK(measure(Rational(1), 3) == Readout{3, 1000});
    CHECK(measure(Rational(1, 2), 3) == Readout{3, 500});
    CHECK(measure(Rational(999, 1000), 3) == Readout{3, 999});
    CHECK(measure(Rational(9999, 10000), 3) == Readout{3, 999});
    CHECK_THROWS_AS(measure(Rational(-1, 2), 3), DomainError);
    CHECK_THROWS_AS(measure(Rational(3, 2), 3), DomainError);
    CHECK_THROWS_AS(measure(Rational(1, 2), 0), DomainError);
}

TEST_CASE("readout text") {
    CHECK(Readout{3, 0}.str() == "0.000");
    CHECK(Readout{3, 1000}.str() == "1.000");
    CHECK(Readout{3, 7}.str() == "0.007");
    CHECK(parse_readout("0.500", 3) == Readout{3, 500});
    CHECK(parse_readout("1.000", 3) == Readout{3, 1000});
    CHECK_THROWS_AS(parse_readout("0.50", 3), ParseError);
    CHECK_THROWS_AS(parse_readout("0,500", 3), ParseError);
    CHECK_THROWS_AS(parse_readout(".500", 3), ParseError);
    CHECK_THROWS_AS(parse_readout("1.001", 3), InvalidState);
}

TEST_CASE("cells partition the unit interval") {
    for (unsigned d = 1; d <= 2; ++d) {
        Rng rng(d);
        for (int t = 0; t < 500; ++t) {
            const Rational x = rng.unit_rational(100000);
            const Readout m = measure(x, d);
            REQUIRE(cell(m).contains(x));
            if (m.k > 0) {
                REQUIRE_FALSE(cell(Readout{d, m.k - 1}).contains(x));
            }
        }
    }
    CHECK(cell(Readout{3, 1000}).contains(Rational(1)));
    CHECK_FALSE(cell(Readout{3, 999}).contains(Rational(1)));
    CHECK_THROWS_AS(cell(Readout{3, 1001}), InvalidState);
}

TEST_CASE("successors") {
    CHECK(members(successors({3, 0})) == std::vector<std::uint64_t>{0, 1});
    CHECK(members(successors({3, 999})) == std::vector<std::uint64_t>{0, 1, 2});
    CHECK(members(successors({3, 500})) == std::vector<std::uint64_t>{998, 999, 1000});
    CHECK(members(successors({3, 1000})) == std::vector<std::uint64_t>{0});
    CHECK_THROWS_AS(successors({3, 1001}), InvalidState);
    CHECK_THROWS_AS(successors({0, 0}), InvalidState);
}

TEST_CASE("relation_table") {
    const auto t1 = relation_table(1);
    CHECK(t1.size() == 11);
    CHECK(members(t1.front().second) == std::vector<std::uint64_t>{0, 1});
    CHECK(members(t1.back().second) == std::vector<std::uint64_t>{0});
    CHECK(relation_table(2).size() == 101);
    for (std::size_t k = 0; k < t1.size(); ++k) {
        CHECK(t1[k].first == k);
        CHECK_FALSE(t1[k].second.members.empty());
    }
}

TEST_CASE("exact successors match the sampling oracle") {
    for (unsigned d = 1; d <= 2; ++d) {
        for (const auto& [k, succ] : relation_table(d)) {
            const std::set<std::uint64_t> sampled = oracle::sampled_successors(k, d, 1000);
            REQUIRE(std::vector<std::uint64_t>(sampled.begin(), sampled.end()) == succ.members);
        }
    }
}

TEST_CASE("every successor has a witness") {
    for (unsigned d = 1; d <= 2; ++d) {
        for (std::uint64_t k = 0; k <= oracle::ten_pow(d); ++k) {
            const Readout m{d, k};
            const auto ws = successor_witnesses(m);
            REQUIRE(ws.size() == successors(m).members.size());
            for (const SuccessorWitness& w : ws) {
                REQUIRE(cell(m).contains(w.x));
                REQUIRE(measure(baker_step(w.x), d).k == w.k);
            }
        }
    }
}

TEST_CASE("reach_n") {
    CHECK(members(reach_n({3, 123}, 0)) == std::vector<std::uint64_t>{123});
    CHECK(members(reach_n({3, 0}, 2)) == std::vector<std::uint64_t>{0, 1, 2, 3});
    CHECK(members(reach_n({3, 1000}, 1)) == std::vector<std::uint64_t>{0});

    for (std::uint64_t k : {0ULL, 250ULL, 499ULL, 500ULL, 501ULL, 1000ULL}) {
        const Readout m{3, k};
        for (std::uint64_t n = 0; n < 6; ++n) {
            std::set<std::uint64_t> next;
            for (std::uint64_t j : reach_n(m, n).members) {
                for (std::uint64_t s : successors({3, j}).members) {
                    next.insert(s);
                }
            }
            REQUIRE(std::vector<std::uint64_t>(next.begin(), next.end()) == reach_n(m, n + 1).members);
        }
    }
}

TEST_CASE("readouts within half a step are equal") {
    for (unsigned d = 1; d <= 2; ++d) {
        const Rational eta = readout_eta(d);
        const std::uint64_t S = oracle::ten_pow(d);
        for (std::uint64_t i = 0; i <= S; ++i) {
            for (std::uint64_t j = 0; j <= S; ++j) {
                const bool close = abs(Readout{d, i}.value() - Readout{d, j}.value()) <= eta;
                REQUIRE(close == (i == j));
            }
        }
    }
}
