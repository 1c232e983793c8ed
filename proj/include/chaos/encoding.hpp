#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "chaos/numbers.hpp"

namespace chaos {

/// Which injection of the rationals into the naturals to use.
///
/// canonical:   r ↦ pair(pair(sgn r, num r), den r)
/// alternative: r ↦ pair(num r, pair(sgn r, den r))
///
/// with sgn r = 0 for r ≥ 0 and 1 for r < 0.
enum class EncodingId { canonical, alternative };

std::string_view to_string(EncodingId e);
/// Throws ParseError for anything but "canonical" / "alternative".
EncodingId parse_encoding(std::string_view text);

/// Cantor pairing (n + p)(n + p + 1)/2 + p, a bijection N² → N.
Natural pair(const Natural& n, const Natural& p);

/// Inverse of pair.
std::pair<Natural, Natural> unpair(const Natural& c);

Natural encode_rational(const Rational& r, EncodingId e = EncodingId::canonical);

/// Throws NotACode when `c` decodes to a non-canonical triple (zero
/// denominator, common factor, sign flag above 1, or negative zero).
Rational decode_rational(const Natural& c, EncodingId e = EncodingId::canonical);

/// Re-encodes a valid code under another encoding. NotACode propagates.
Natural translate(const Natural& c, EncodingId from, EncodingId to);

}  // namespace chaos
