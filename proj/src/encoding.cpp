#include "chaos/encoding.hpp"

#include "chaos/errors.hpp"

namespace chaos {

std::string_view to_string(EncodingId e) {
    return e == EncodingId::canonical ? "canonical" : "alternative";
}

EncodingId parse_encoding(std::string_view text) {
    if (text == "canonical") {
        return EncodingId::canonical;
    }
    if (text == "alternative") {
        return EncodingId::alternative;
    }
    throw ParseError("unknown encoding '" + std::string(text) + "'");
}

Natural pair(const Natural& n, const Natural& p) {
    const mpz_class s = n.value() + p.value();
    mpz_class tri = s * (s + 1);
    mpz_fdiv_q_2exp(tri.get_mpz_t(), tri.get_mpz_t(), 1);
    return Natural(mpz_class(tri + p.value()));
}

std::pair<Natural, Natural> unpair(const Natural& c) {
    // Diagonal index s = floor((sqrt(8c + 1) - 1) / 2); exact with integer sqrt.
    mpz_class disc = 8 * c.value() + 1;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
    mpz_class s = (root - 1) / 2;
    mpz_class tri = s * (s + 1) / 2;
    mpz_class p = c.value() - tri;
    return {Natural(mpz_class(s - p)), Natural(std::move(p))};
}

namespace {

struct Triple {
    Natural sign;
    Natural num;
    Natural den;
};

Triple split(const Natural& c, EncodingId e) {
    if (e == EncodingId::canonical) {
        auto [sn, den] = unpair(c);
        auto [sign, num] = unpair(sn);
        return {sign, num, den};
    }
    auto [num, sd] = unpair(c);
    auto [sign, den] = unpair(sd);
    return {sign, num, den};
}

}  // namespace

Natural encode_rational(const Rational& r, EncodingId e) {
    const Natural sign = r.negative() ? 1 : 0;
    if (e == EncodingId::canonical) {
        return pair(pair(sign, r.num()), r.den());
    }
    return pair(r.num(), pair(sign, r.den()));
}

Rational decode_rational(const Natural& c, EncodingId e) {
    const Triple t = split(c, e);
    const auto reject = [&](const char* why) {
        return NotACode(c.str() + " is not a " + std::string(to_string(e)) + " rational code: " + why);
    };
    if (t.den.is_zero()) {
        throw reject("zero denominator");
    }
    if (t.sign > Natural(1)) {
        throw reject("sign flag above 1");
    }
    if (t.num.is_zero() && t.sign == Natural(1)) {
        throw reject("negative zero");
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), t.num.value().get_mpz_t(), t.den.value().get_mpz_t());
    if (g != 1) {
        throw reject("numerator and denominator share a factor");
    }
    return Rational::from_parts(t.sign == Natural(1), t.num, t.den);
}

Natural translate(const Natural& c, EncodingId from, EncodingId to) {
    const Rational r = decode_rational(c, from);
    if (from == to) {
        return c;
    }
    return encode_rational(r, to);
}

}  // namespace chaos
