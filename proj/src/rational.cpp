#include "gregory/rational.hpp"

#include <ostream>

namespace gregory {

namespace {

mpz_class parse_integer(std::string_view digits, std::string_view whole) {
    std::string_view body = digits;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        body.remove_prefix(1);
    }
    if (body.empty()) {
        throw std::invalid_argument("malformed rational: \"" + std::string(whole) + "\"");
    }
    for (char c : body) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("malformed rational: \"" + std::string(whole) + "\"");
        }
    }
    std::string owned(digits.front() == '+' ? digits.substr(1) : digits);
    return mpz_class(owned, 10);
}

}  // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) {
        throw ArithmeticError("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    return Rational(parse_integer(text.substr(0, slash), text),
                    parse_integer(text.substr(slash + 1), text));
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw ArithmeticError("inverse of zero");
    }
    Rational out;
    mpq_inv(out.value_.get_mpq_t(), value_.get_mpq_t());
    return out;
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    Rational out;
    mpz_pow_ui(out.value_.get_num_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(out.value_.get_den_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return out;
}

std::string Rational::str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const {
    Rational out;
    out.value_ = -value_;
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
    if (rhs.is_zero()) {
        throw ArithmeticError("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(unsigned n, unsigned k) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return Rational(c);
}

}  // namespace gregory
