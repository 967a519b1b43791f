#include "routh/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace routh {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s, bool allow_sign) {
    std::string_view digits = s;
    bool negative = false;
    if (allow_sign && !digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        negative = digits.front() == '-';
        digits.remove_prefix(1);
    }
    if (!is_digits(digits)) {
        throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
    }
    mpz_class v(std::string(digits), 10);
    return negative ? mpz_class(-v) : v;
}

}  // namespace

Rational::Rational(long n) : value_(n) {}

Rational::Rational(const mpz_class& n) : value_(n) {}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw std::domain_error("zero denominator");
    value_ = mpq_class(n, d);
    value_.canonicalize();
}

Rational Rational::make(long n, long d) {
    return Rational(mpz_class(n), mpz_class(d));
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, true));
    }
    const mpz_class n = parse_integer(text.substr(0, slash), true);
    const mpz_class d = parse_integer(text.substr(slash + 1), false);
    return Rational(n, d);
}

Rational Rational::abs() const {
    return Rational(mpq_class(::abs(value_)));
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("division by zero");
    return Rational(value_.get_den(), value_.get_num());
}

std::string Rational::str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(unsigned digits) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);

    const mpz_class num = ::abs(value_.get_num()) * scale;
    const mpz_class& den = value_.get_den();
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());

    const int half = cmp(mpz_class(2 * r), den);
    if (half > 0 || (half == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;

    std::string body = q.get_str();
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    std::string out;
    // A value that rounds to zero is printed without a sign.
    if (sign() < 0 && q != 0) out.push_back('-');
    out += body.substr(0, body.size() - digits);
    if (digits > 0) {
        out.push_back('.');
        out += body.substr(body.size() - digits);
    }
    return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-value_));
}

Rational rat_arith(const Rational& a, const Rational& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw std::logic_error("unknown arithmetic op");
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace routh
