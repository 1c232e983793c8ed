#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace chaos {

/// Unbounded non-negative integer.
class Natural {
public:
    Natural() = default;
    Natural(std::uint64_t v);  // NOLINT(google-explicit-constructor)
    /// Throws DomainError when `v` is negative.
    explicit Natural(mpz_class v);

    /// Decimal digits only; throws ParseError otherwise.
    static Natural parse(std::string_view text);

    const mpz_class& value() const noexcept { return v_; }
    std::string str() const { return v_.get_str(); }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool fits_u64() const noexcept;
    /// Throws DomainError when the value does not fit.
    std::uint64_t to_u64() const;
    /// Number of bits in the binary representation (0 for zero).
    std::size_t bit_length() const noexcept;

    friend Natural operator+(const Natural& a, const Natural& b) { return Natural(mpz_class(a.v_ + b.v_)); }
    friend Natural operator*(const Natural& a, const Natural& b) { return Natural(mpz_class(a.v_ * b.v_)); }
    /// Truncated subtraction: max(a - b, 0).
    friend Natural monus(const Natural& a, const Natural& b);
    Natural& operator+=(const Natural& o) {
        v_ += o.v_;
        return *this;
    }

    friend bool operator==(const Natural& a, const Natural& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) { return cmp(a.v_, b.v_) <=> 0; }

private:
    mpz_class v_{0};
};

Natural monus(const Natural& a, const Natural& b);

std::ostream& operator<<(std::ostream& os, const Natural& n);

/// Exact rational number, always held in reduced form with positive
/// denominator; zero is +0/1.
class Rational {
public:
    Rational() = default;
    Rational(long v);  // NOLINT(google-explicit-constructor)
    Rational(int v) : Rational(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    /// num/den for integer num and nonzero den; throws DomainError on den == 0.
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class q);

    /// Sign/magnitude constructor. Canonicalizes; throws DomainError on den == 0.
    static Rational from_parts(bool negative, const Natural& num, const Natural& den);

    /// "-1/3", "0", "7": optional '-', decimal numerator, optional "/den".
    static Rational parse(std::string_view text);

    bool negative() const noexcept { return sgn(q_) < 0; }
    bool is_zero() const noexcept { return sgn(q_) == 0; }
    bool is_integer() const noexcept { return q_.get_den() == 1; }
    /// |numerator| of the reduced form.
    Natural num() const;
    Natural den() const;
    const mpq_class& value() const noexcept { return q_; }

    /// The text format shared by the CLI and program corpora.
    std::string str() const;

    /// Largest integer not above the value.
    mpz_class floor() const;
    mpz_class ceil() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    /// Throws DomainError on division by zero.
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) {
        q_ += o.q_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        q_ *= o.q_;
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <=> 0; }

private:
    mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);
/// 2^e for any integer exponent e.
Rational pow2(long e);
/// 10^e for e >= 0.
mpz_class pow10(unsigned long e);
/// Clamps into [lo, hi].
Rational clamp(const Rational& x, const Rational& lo, const Rational& hi);

/// Truncated (toward zero) decimal expansion with exactly `digits`
/// fractional digits, e.g. to_decimal(1/3, 3) == "0.333".
std::string to_decimal(const Rational& r, unsigned digits);

}  // namespace chaos
