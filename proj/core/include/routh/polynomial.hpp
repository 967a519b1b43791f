#pragma once

/**
 * @file polynomial.hpp
 * @brief Sparse integer polynomials in x, y, z, t and their quotients.
 *
 * The variable set is fixed. Identities in three variables embed with the
 * t exponent held at zero. Terms live in an ordered map keyed by exponent
 * vector, so the canonical form is the map itself and rendering walks the
 * terms in ascending lexicographic order of (e_x, e_y, e_z, e_t).
 */

#include <array>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "routh/rational.hpp"

namespace routh {

using Exponents = std::array<unsigned, 4>;

class MultiPoly {
public:
    using TermMap = std::map<Exponents, mpz_class>;

    MultiPoly() = default;
    MultiPoly(long constant);  // NOLINT(google-explicit-constructor)
    MultiPoly(int constant) : MultiPoly(static_cast<long>(constant)) {}  // NOLINT

    static MultiPoly monomial(const mpz_class& coeff, const Exponents& e);
    static MultiPoly var(unsigned index);
    static MultiPoly x() { return var(0); }
    static MultiPoly y() { return var(1); }
    static MultiPoly z() { return var(2); }
    static MultiPoly t() { return var(3); }

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    unsigned total_degree() const;

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const;

    MultiPoly pow(unsigned n) const;

    /// Exact substitution of (x, y, z, t).
    Rational eval(const std::array<Rational, 4>& at) const;

    /// e.g. "1 + x + x*y + x*y*z"; the zero polynomial renders as "0".
    std::string str() const;

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

private:
    void add_term(const Exponents& e, const mpz_class& c);

    TermMap terms_;
};

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b);

/// Formal quotient num/den. Not reduced; equality is by cross-multiplication.
class RatFunc {
public:
    RatFunc() : num_(0), den_(1) {}
    RatFunc(long constant) : num_(constant), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFunc(int constant) : RatFunc(static_cast<long>(constant)) {}  // NOLINT
    RatFunc(MultiPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
    /// Throws std::domain_error when den is the zero polynomial.
    RatFunc(MultiPoly num, MultiPoly den);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    RatFunc& operator+=(const RatFunc& rhs);
    RatFunc& operator-=(const RatFunc& rhs);
    RatFunc& operator*=(const RatFunc& rhs);
    RatFunc& operator/=(const RatFunc& rhs);

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc operator-() const { return RatFunc(-num_, den_); }

    /// Throws std::domain_error if the denominator vanishes at `at`.
    Rational eval(const std::array<Rational, 4>& at) const;

private:
    MultiPoly num_;
    MultiPoly den_;
};

bool ratfunc_eq(const RatFunc& a, const RatFunc& b);

/// Sum of sign * term over a shared denominator. Identical denominators are
/// not multiplied together again.
RatFunc ratfunc_combine(const std::vector<std::pair<int, RatFunc>>& terms);

}  // namespace routh
