#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalar used by every geometric and closed-form routine.
 *
 * Values are always kept in lowest terms with a positive denominator, and
 * zero is stored as 0/1. Two rationals are equal exactly when their
 * numerators and denominators are equal, so identity checks reduce to a
 * structural comparison.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace routh {

class Rational {
public:
    Rational() = default;
    Rational(long n);  // NOLINT(google-explicit-constructor)
    Rational(int n) : Rational(static_cast<long>(n)) {}  // NOLINT
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(const mpz_class& n);

    /// Throws std::domain_error("zero denominator") when d == 0.
    static Rational make(long n, long d);

    /// Parses "n/d" or "n" (optional leading sign on n). Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_positive() const { return sign() > 0; }

    Rational abs() const;
    Rational reciprocal() const;

    /// Canonical "n/d"; the denominator is always printed, so 3 is "3/1".
    std::string str() const;

    /// Round-half-even decimal with exactly `digits` fractional digits.
    std::string to_decimal(unsigned digits) const;

    double to_double() const { return value_.get_d(); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_{0};
};

enum class ArithOp { add, sub, mul, div };

/// Dispatching form of the four field operations.
Rational rat_arith(const Rational& a, const Rational& b, ArithOp op);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace routh
