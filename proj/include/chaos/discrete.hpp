#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "chaos/numbers.hpp"

namespace chaos {

/// Position i/N on the uniform grid {0, 1/N, ..., 1}.
struct GridState {
    std::uint64_t N = 1;
    std::uint64_t i = 0;

    Rational position() const;
    friend bool operator==(const GridState&, const GridState&) = default;
};

/// Doubling-and-reflecting step: j = 2i if 2i ≤ N, else 2N − 2i. Agrees
/// exactly with baker_step(i/N). Throws InvalidState when N = 0 or i > N.
GridState grid_step(GridState s);

GridState grid_iter(GridState s, std::uint64_t n);

/// Graph of grid_step as N + 1 pairs (i, j), ascending by i.
std::vector<std::pair<std::uint64_t, std::uint64_t>> grid_table(std::uint64_t N);

/// Half the spacing between distinct grid positions, 1/(2N).
Rational min_separation_eta(std::uint64_t N);

/// Orbit shape of a state on a finite grid: the orbit enters its cycle after
/// `entry` steps and the cycle has `length` states.
struct GridCycle {
    std::uint64_t entry = 0;
    std::uint64_t length = 0;
};

GridCycle find_cycle(GridState s);

}  // namespace chaos
