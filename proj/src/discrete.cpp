#include "chaos/discrete.hpp"

#include <limits>
#include <string>
#include <unordered_map>

#include "chaos/errors.hpp"

namespace chaos {

namespace {

void require_valid(const GridState& s) {
    if (s.N == 0) {
        throw InvalidState("grid resolution N must be at least 1");
    }
    if (s.N > std::numeric_limits<std::uint64_t>::max() / 2) {
        throw InvalidState("grid resolution N too large");
    }
    if (s.i > s.N) {
        throw InvalidState("grid index " + std::to_string(s.i) + " exceeds N = " + std::to_string(s.N));
    }
}

std::uint64_t step_index(std::uint64_t N, std::uint64_t i) {
    return 2 * i <= N ? 2 * i : 2 * N - 2 * i;
}

}  // namespace

Rational GridState::position() const {
    return Rational(mpz_class(static_cast<unsigned long>(i)), mpz_class(static_cast<unsigned long>(N)));
}

GridState grid_step(GridState s) {
    require_valid(s);
    return {s.N, step_index(s.N, s.i)};
}

GridState grid_iter(GridState s, std::uint64_t n) {
    require_valid(s);
    for (std::uint64_t k = 0; k < n; ++k) {
        s.i = step_index(s.N, s.i);
    }
    return s;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> grid_table(std::uint64_t N) {
    require_valid({N, 0});
    std::vector<std::pair<std::uint64_t, std::uint64_t>> table;
    table.reserve(N + 1);
    for (std::uint64_t i = 0; i <= N; ++i) {
        table.emplace_back(i, step_index(N, i));
    }
    return table;
}

Rational min_separation_eta(std::uint64_t N) {
    require_valid({N, 0});
    return Rational(mpz_class(1), mpz_class(static_cast<unsigned long>(N)) * 2);
}

GridCycle find_cycle(GridState s) {
    require_valid(s);
    std::unordered_map<std::uint64_t, std::uint64_t> first_seen;
    for (std::uint64_t t = 0;; ++t) {
        auto [it, fresh] = first_seen.emplace(s.i, t);
        if (!fresh) {
            return {it->second, t - it->second};
        }
        s.i = step_index(s.N, s.i);
    }
}

}  // namespace chaos
