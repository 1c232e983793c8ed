#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chaos/numbers.hpp"

namespace chaos {

/// What a d-digit truncating device reports: the value k·10^(−d), which
/// stands for every position in the cell [k·10^(−d), (k+1)·10^(−d)) ∩ [0, 1].
/// The top readout k = 10^d stands for the single position 1.
struct Readout {
    unsigned d = 1;
    std::uint64_t k = 0;

    Rational value() const;
    /// Fixed-point text with exactly d digits, e.g. "0.000", "1.000".
    std::string str() const;
    friend bool operator==(const Readout&, const Readout&) = default;
};

/// Largest supported digit count; 10^d must fit a machine word.
inline constexpr unsigned kMaxDigits = 18;

/// Parses "0.250" style text with exactly `d` fractional digits. Throws
/// ParseError on malformed text or a digit count other than d, and
/// InvalidState for values above 1.
Readout parse_readout(std::string_view text, unsigned d);

/// k = floor(x·10^d). Throws DomainError when x ∉ [0, 1] or d is out of range.
Readout measure(const Rational& x, unsigned d);

/// Rational interval with independent open/closed ends.
struct Span {
    Rational lo;
    Rational hi;
    bool lo_closed = true;
    bool hi_closed = true;

    bool empty() const;
    bool contains(const Rational& x) const;
};

/// The set of positions a readout stands for.
Span cell(const Readout& m);

/// Readouts that may follow one readout after a step, sorted ascending.
struct SuccessorSet {
    unsigned d = 1;
    std::vector<std::uint64_t> members;

    bool contains(std::uint64_t k) const;
    friend bool operator==(const SuccessorSet&, const SuccessorSet&) = default;
};

/// Exactly { measure(b(x), d) : x ∈ cell(m) }, from the exact image of the
/// cell under each branch of the map. Throws InvalidState for a bad readout.
SuccessorSet successors(const Readout& m);

/// A successor together with a position of the source cell realising it.
struct SuccessorWitness {
    std::uint64_t k;
    Rational x;
};

/// One witness per member of successors(m), in the same order.
std::vector<SuccessorWitness> successor_witnesses(const Readout& m);

/// successors() for every readout of resolution d, ascending by k.
std::vector<std::pair<std::uint64_t, SuccessorSet>> relation_table(unsigned d);

/// Readouts reachable from m in exactly n steps; reach_n(m, 0) = {m}.
SuccessorSet reach_n(const Readout& m, std::uint64_t n);

/// Half the distance between neighbouring readouts, 1/(2·10^d).
Rational readout_eta(unsigned d);

}  // namespace chaos
