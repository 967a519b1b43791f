#include "routh/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace routh {

namespace {

constexpr std::array<char, 4> kVarNames{'x', 'y', 'z', 't'};

Rational power(const Rational& base, unsigned e) {
    Rational out(1);
    for (unsigned i = 0; i < e; ++i) out *= base;
    return out;
}

}  // namespace

MultiPoly::MultiPoly(long constant) {
    if (constant != 0) terms_.emplace(Exponents{0, 0, 0, 0}, mpz_class(constant));
}

MultiPoly MultiPoly::monomial(const mpz_class& coeff, const Exponents& e) {
    MultiPoly p;
    if (coeff != 0) p.terms_.emplace(e, coeff);
    return p;
}

MultiPoly MultiPoly::var(unsigned index) {
    if (index >= 4) throw std::out_of_range("variable index");
    Exponents e{0, 0, 0, 0};
    e[index] = 1;
    return monomial(1, e);
}

unsigned MultiPoly::total_degree() const {
    unsigned deg = 0;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e[0] + e[1] + e[2] + e[3]);
    return deg;
}

void MultiPoly::add_term(const Exponents& e, const mpz_class& c) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MultiPoly MultiPoly::pow(unsigned n) const {
    MultiPoly out(1);
    for (unsigned i = 0; i < n; ++i) out *= *this;
    return out;
}

Rational MultiPoly::eval(const std::array<Rational, 4>& at) const {
    Rational sum;
    for (const auto& [e, c] : terms_) {
        Rational term{c};
        for (std::size_t v = 0; v < 4; ++v) {
            if (e[v] != 0) term *= power(at[v], e[v]);
        }
        sum += term;
    }
    return sum;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        const mpz_class mag = abs(c);
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;

        std::string factors;
        for (std::size_t v = 0; v < 4; ++v) {
            if (e[v] == 0) continue;
            if (!factors.empty()) factors += '*';
            factors += kVarNames[v];
            if (e[v] > 1) factors += '^' + std::to_string(e[v]);
        }
        if (factors.empty()) {
            os << mag.get_str();
        } else if (mag == 1) {
            os << factors;
        } else {
            os << mag.get_str() << '*' << factors;
        }
    }
    return os.str();
}

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) { return a + b; }

MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator polynomial");
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
    if (rhs.num_.is_zero()) throw std::domain_error("division by zero rational function");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    return *this;
}

Rational RatFunc::eval(const std::array<Rational, 4>& at) const {
    const Rational d = den_.eval(at);
    if (d.is_zero()) throw std::domain_error("denominator vanishes at evaluation point");
    return num_.eval(at) / d;
}

bool ratfunc_eq(const RatFunc& a, const RatFunc& b) {
    return (a.num() * b.den() - b.num() * a.den()).is_zero();
}

RatFunc ratfunc_combine(const std::vector<std::pair<int, RatFunc>>& terms) {
    RatFunc acc(0);
    for (const auto& [sign, term] : terms) {
        if (sign == 0) continue;
        if (sign > 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc;
}

}  // namespace routh
