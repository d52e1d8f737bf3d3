#pragma once

#include <iosfwd>
#include <string>

#include "gregory/polynomial.hpp"

namespace gregory {

// Element of Q(q), stored as num/den with gcd(num, den) = 1 and a monic
// denominator. Every constructor and operation returns this canonical
// form, so structural equality is field equality.
class RationalFunction {
public:
    RationalFunction() : den_(Polynomial::constant(1)) {}
    RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT
    RationalFunction(const Rational& c);                         // NOLINT
    RationalFunction(const Polynomial& p);                       // NOLINT
    // Reduces num/den; throws ArithmeticError when den is zero.
    RationalFunction(const Polynomial& num, const Polynomial& den);

    // Caller guarantees gcd(num, den) = 1; only the monic scaling is applied.
    static RationalFunction from_coprime(Polynomial num, Polynomial den);
    // q^exponent, negative exponents included.
    static RationalFunction q_power(long exponent);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    // Exact value at q = v; throws PoleError when den(v) = 0.
    Rational eval(const Rational& v) const;
    RationalFunction inverse() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& rhs);
    RationalFunction& operator-=(const RationalFunction& rhs);
    RationalFunction& operator*=(const RationalFunction& rhs);
    RationalFunction& operator/=(const RationalFunction& rhs);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    std::string to_string() const;

private:
    struct Reduced {};
    RationalFunction(Polynomial num, Polynomial den, Reduced);

    Polynomial num_;
    Polynomial den_;
};

class PoleError : public ArithmeticError {
public:
    using ArithmeticError::ArithmeticError;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace gregory
