#pragma once

// Independent reference computations used by the tests. Everything here is
// written directly against GMP so it shares no code path with the library.

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

/// Walks the Cantor enumeration (0,0), (1,0), (0,1), (2,0), (1,1), ...
/// where the c-th visited pair (n, p) is the one with code c.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> cantor_walk(std::uint64_t count) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t s = 0; out.size() < count; ++s) {
        for (std::uint64_t p = 0; p <= s && out.size() < count; ++p) {
            out.emplace_back(s - p, p);
        }
    }
    return out;
}

/// Tent map written as 1 − |1 − 2x|.
inline mpq_class tent(const mpq_class& x) {
    mpq_class t = 1 - 2 * x;
    return 1 - abs(t);
}

inline mpq_class tent_iter(mpq_class x, std::uint64_t n) {
    for (std::uint64_t k = 0; k < n; ++k) {
        x = tent(x);
    }
    return x;
}

/// x^(2^n) by repeated exact squaring.
inline mpq_class square_iter(mpq_class x, std::uint64_t n) {
    for (std::uint64_t k = 0; k < n; ++k) {
        x *= x;
    }
    return x;
}

/// Canonical a/b.
inline mpq_class frac(unsigned long a, unsigned long b) {
    mpq_class x(a, b);
    x.canonicalize();
    return x;
}

inline std::uint64_t ten_pow(unsigned d) {
    std::uint64_t s = 1;
    while (d-- > 0) {
        s *= 10;
    }
    return s;
}

/// floor(y · 10^d) for y in [0, 1].
inline std::uint64_t truncate(const mpq_class& y, unsigned d) {
    mpq_class scaled = y * mpq_class(ten_pow(d));
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    return f.get_ui();
}

/// Brute-force successor set of readout k at resolution d: pushes sample
/// points of the cell through the tent map and truncates. Samples are
/// `per_cell` evenly spaced interior points, the left endpoint, points just
/// inside the right endpoint, 1/2 when it lies in the cell, and every
/// preimage of a readout boundary that lies in the cell together with its
/// near neighbours.
inline std::set<std::uint64_t> sampled_successors(std::uint64_t k, unsigned d, unsigned per_cell) {
    const std::uint64_t S = ten_pow(d);
    std::set<std::uint64_t> out;
    if (k == S) {
        out.insert(truncate(tent(mpq_class(1)), d));
        return out;
    }
    const mpq_class lo = frac(k, S);
    const mpq_class hi = frac(k + 1, S);
    const mpq_class width = hi - lo;
    const mpq_class tiny = width / 1000000000;

    std::vector<mpq_class> xs;
    for (unsigned j = 0; j < per_cell; ++j) {
        xs.push_back(lo + width * frac(2 * j + 1, 2 * per_cell));
    }
    xs.push_back(lo);
    xs.push_back(lo + tiny);
    xs.push_back(hi - tiny);
    xs.push_back(mpq_class(1, 2));
    // Boundary preimages: y = j/S has preimages j/(2S) and 1 − j/(2S).
    for (std::uint64_t j = 0; j <= S; ++j) {
        for (const mpq_class& x : {frac(j, 2 * S), mpq_class(1 - frac(j, 2 * S))}) {
            if (x >= lo && x < hi) {
                xs.push_back(x);
                xs.push_back(x + tiny);
                xs.push_back(x - tiny);
            }
        }
    }
    for (mpq_class& x : xs) {
        x.canonicalize();
        if (x >= lo && x < hi) {
            out.insert(truncate(tent(x), d));
        }
    }
    return out;
}

}  // namespace oracle
