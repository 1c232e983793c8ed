#include "chaos/numbers.hpp"

#include <algorithm>
#include <ostream>

#include "chaos/errors.hpp"

namespace chaos {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

mpz_class parse_digits(std::string_view s, std::string_view whole) {
    if (!all_digits(s)) {
        throw ParseError("not a decimal number: '" + std::string(whole) + "'");
    }
    return mpz_class(std::string(s), 10);
}

}  // namespace

Natural::Natural(std::uint64_t v) {
    // mpz_class has no portable uint64 constructor on every platform.
    mpz_import(v_.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
}

Natural::Natural(mpz_class v) : v_(std::move(v)) {
    if (sgn(v_) < 0) {
        throw DomainError("negative value is not a natural number: " + v_.get_str());
    }
}

Natural Natural::parse(std::string_view text) {
    return Natural(parse_digits(text, text));
}

bool Natural::fits_u64() const noexcept {
    return mpz_sizeinbase(v_.get_mpz_t(), 2) <= 64;
}

std::uint64_t Natural::to_u64() const {
    if (!fits_u64()) {
        throw DomainError("natural number too large for a machine word: " + str());
    }
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, v_.get_mpz_t());
    return out;
}

std::size_t Natural::bit_length() const noexcept {
    return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2);
}

Natural monus(const Natural& a, const Natural& b) {
    if (a.v_ <= b.v_) {
        return Natural{};
    }
    return Natural(mpz_class(a.v_ - b.v_));
}

std::ostream& operator<<(std::ostream& os, const Natural& n) {
    return os << n.str();
}

Rational::Rational(long v) : q_(v) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) {
        throw DomainError("zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    if (sgn(q_.get_den()) == 0) {
        throw DomainError("zero denominator");
    }
    q_.canonicalize();
}

Rational Rational::from_parts(bool negative, const Natural& num, const Natural& den) {
    mpz_class n = num.value();
    if (negative) {
        n = -n;
    }
    return Rational(n, den.value());
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool neg = false;
    if (!body.empty() && body.front() == '-') {
        neg = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    mpz_class num = parse_digits(body.substr(0, slash), text);
    mpz_class den = 1;
    if (slash != std::string_view::npos) {
        den = parse_digits(body.substr(slash + 1), text);
        if (sgn(den) == 0) {
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        }
    }
    if (neg) {
        num = -num;
    }
    return Rational(num, den);
}

Natural Rational::num() const {
    return Natural(mpz_class(::abs(q_.get_num())));
}

Natural Rational::den() const {
    return Natural(mpz_class(q_.get_den()));
}

std::string Rational::str() const {
    // mpq's own formatting already omits a unit denominator.
    return q_.get_str();
}

mpz_class Rational::floor() const {
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return out;
}

mpz_class Rational::ceil() const {
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return out;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) {
        throw DomainError("division by zero");
    }
    return Rational(mpq_class(a.q_ / b.q_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational abs(const Rational& r) {
    return r.negative() ? -r : r;
}

Rational pow2(long e) {
    mpz_class p = 1;
    if (e >= 0) {
        mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
        return Rational(p, 1);
    }
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    return Rational(1, p);
}

mpz_class pow10(unsigned long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, e);
    return p;
}

Rational clamp(const Rational& x, const Rational& lo, const Rational& hi) {
    if (x < lo) {
        return lo;
    }
    if (x > hi) {
        return hi;
    }
    return x;
}

std::string to_decimal(const Rational& r, unsigned digits) {
    const Rational scaled = abs(r) * Rational(pow10(digits), 1);
    const mpz_class truncated = scaled.floor();
    std::string body = truncated.get_str();
    if (body.size() <= digits) {
        body.insert(0, digits + 1 - body.size(), '0');
    }
    std::string out;
    if (r.negative() && sgn(truncated) != 0) {
        out.push_back('-');
    }
    out.append(body, 0, body.size() - digits);
    if (digits > 0) {
        out.push_back('.');
        out.append(body, body.size() - digits, digits);
    }
    return out;
}

}  // namespace chaos
