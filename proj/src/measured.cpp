#include "chaos/measured.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "chaos/errors.hpp"

namespace chaos {

namespace {

const Rational kHalf(1, 2);

std::uint64_t scale_of(unsigned d) {
    std::uint64_t s = 1;
    for (unsigned j = 0; j < d; ++j) {
        s *= 10;
    }
    return s;
}

void require_digits(unsigned d) {
    if (d < 1 || d > kMaxDigits) {
        throw InvalidState("digit count must lie in [1, " + std::to_string(kMaxDigits) + "], got " +
                           std::to_string(d));
    }
}

void require_valid(const Readout& m) {
    require_digits(m.d);
    if (m.k > scale_of(m.d)) {
        throw InvalidState("readout index " + std::to_string(m.k) + " exceeds 10^" + std::to_string(m.d));
    }
}

Rational from_u64(std::uint64_t v) {
    return Rational(mpz_class(static_cast<unsigned long>(v)), 1);
}

std::uint64_t to_index(const mpz_class& v) {
    return Natural(v).to_u64();
}

// Readout indices whose cells meet a nonempty span inside [0, 1].
std::pair<std::uint64_t, std::uint64_t> cells_met(const Span& s, unsigned d) {
    const Rational scale = from_u64(scale_of(d));
    const Rational lo = s.lo * scale;
    const Rational hi = s.hi * scale;
    const std::uint64_t first = to_index(lo.floor());
    std::uint64_t last = to_index(hi.floor());
    if (!s.hi_closed && hi.is_integer()) {
        // The open end sits on a cell boundary, so that cell is not reached.
        last -= 1;
    }
    return {first, last};
}

struct BranchImage {
    Span image;
    bool left;  // true: y = 2x, false: y = 2 − 2x
};

std::vector<BranchImage> cell_image(const Span& c) {
    std::vector<BranchImage> out;

    Span left = c;
    if (left.hi > kHalf) {
        left.hi = kHalf;
        left.hi_closed = true;
    }
    if (!left.empty()) {
        out.push_back({{Rational(2) * left.lo, Rational(2) * left.hi, left.lo_closed, left.hi_closed}, true});
    }

    Span right = c;
    if (right.lo <= kHalf) {
        right.lo = kHalf;
        right.lo_closed = false;
    }
    if (!right.empty()) {
        out.push_back({{Rational(2) - Rational(2) * right.hi, Rational(2) - Rational(2) * right.lo, right.hi_closed,
                        right.lo_closed},
                       false});
    }
    return out;
}

Span intersect(const Span& a, const Span& b) {
    Span s;
    if (a.lo > b.lo || (a.lo == b.lo && !a.lo_closed)) {
        s.lo = a.lo;
        s.lo_closed = a.lo_closed;
    } else {
        s.lo = b.lo;
        s.lo_closed = b.lo_closed;
    }
    if (a.hi < b.hi || (a.hi == b.hi && !a.hi_closed)) {
        s.hi = a.hi;
        s.hi_closed = a.hi_closed;
    } else {
        s.hi = b.hi;
        s.hi_closed = b.hi_closed;
    }
    return s;
}

}  // namespace

Rational Readout::value() const {
    return Rational(mpz_class(static_cast<unsigned long>(k)), mpz_class(static_cast<unsigned long>(scale_of(d))));
}

std::string Readout::str() const {
    return to_decimal(value(), d);
}

Readout parse_readout(std::string_view text, unsigned d) {
    require_digits(d);
    const auto dot = text.find('.');
    const auto digits_ok = [](std::string_view s) {
        return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
    };
    if (dot == std::string_view::npos || !digits_ok(text.substr(0, dot)) || !digits_ok(text.substr(dot + 1))) {
        throw ParseError("readout '" + std::string(text) + "' is not fixed-point text");
    }
    if (text.size() - dot - 1 != d) {
        throw ParseError("readout '" + std::string(text) + "' does not have exactly " + std::to_string(d) +
                         " digits");
    }
    std::string joined(text.substr(0, dot));
    joined += text.substr(dot + 1);
    const mpz_class k(joined, 10);
    if (k > mpz_class(static_cast<unsigned long>(scale_of(d)))) {
        throw InvalidState("readout '" + std::string(text) + "' exceeds 1");
    }
    return Readout{d, to_index(k)};
}

Readout measure(const Rational& x, unsigned d) {
    if (d < 1 || d > kMaxDigits) {
        throw DomainError("digit count must lie in [1, " + std::to_string(kMaxDigits) + "]");
    }
    if (x < Rational(0) || x > Rational(1)) {
        throw DomainError("measured position " + x.str() + " outside [0, 1]");
    }
    return Readout{d, to_index((x * from_u64(scale_of(d))).floor())};
}

bool Span::empty() const {
    return lo > hi || (lo == hi && !(lo_closed && hi_closed));
}

bool Span::contains(const Rational& x) const {
    const bool above = lo_closed ? x >= lo : x > lo;
    const bool below = hi_closed ? x <= hi : x < hi;
    return above && below;
}

Span cell(const Readout& m) {
    require_valid(m);
    const std::uint64_t scale = scale_of(m.d);
    if (m.k == scale) {
        return Span{Rational(1), Rational(1), true, true};
    }
    const Rational width(mpz_class(1), mpz_class(static_cast<unsigned long>(scale)));
    return Span{m.value(), m.value() + width, true, false};
}

bool SuccessorSet::contains(std::uint64_t k) const {
    return std::binary_search(members.begin(), members.end(), k);
}

std::vector<SuccessorWitness> successor_witnesses(const Readout& m) {
    const Span c = cell(m);
    std::map<std::uint64_t, Rational> found;
    for (const BranchImage& b : cell_image(c)) {
        const auto [first, last] = cells_met(b.image, m.d);
        for (std::uint64_t k = first; k <= last; ++k) {
            if (found.contains(k)) {
                continue;
            }
            const Span meet = intersect(b.image, cell(Readout{m.d, k}));
            const Rational y = (meet.lo + meet.hi) * kHalf;
            found.emplace(k, b.left ? y * kHalf : Rational(1) - y * kHalf);
        }
    }
    std::vector<SuccessorWitness> out;
    out.reserve(found.size());
    for (auto& [k, x] : found) {
        out.push_back({k, std::move(x)});
    }
    return out;
}

SuccessorSet successors(const Readout& m) {
    SuccessorSet s{m.d, {}};
    for (const SuccessorWitness& w : successor_witnesses(m)) {
        s.members.push_back(w.k);
    }
    return s;
}

std::vector<std::pair<std::uint64_t, SuccessorSet>> relation_table(unsigned d) {
    require_digits(d);
    const std::uint64_t scale = scale_of(d);
    std::vector<std::pair<std::uint64_t, SuccessorSet>> rows;
    rows.reserve(scale + 1);
    for (std::uint64_t k = 0; k <= scale; ++k) {
        rows.emplace_back(k, successors(Readout{d, k}));
    }
    return rows;
}

SuccessorSet reach_n(const Readout& m, std::uint64_t n) {
    require_valid(m);
    std::set<std::uint64_t> frontier{m.k};
    std::map<std::uint64_t, SuccessorSet> memo;
    for (std::uint64_t step = 0; step < n; ++step) {
        std::set<std::uint64_t> next;
        for (std::uint64_t k : frontier) {
            auto it = memo.find(k);
            if (it == memo.end()) {
                it = memo.emplace(k, successors(Readout{m.d, k})).first;
            }
            next.insert(it->second.members.begin(), it->second.members.end());
        }
        frontier = std::move(next);
    }
    return SuccessorSet{m.d, {frontier.begin(), frontier.end()}};
}

Rational readout_eta(unsigned d) {
    require_digits(d);
    return Rational(mpz_class(1), mpz_class(static_cast<unsigned long>(scale_of(d))) * 2);
}

}  // namespace chaos
