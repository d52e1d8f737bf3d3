#include "gregory/rational_function.hpp"

#include <ostream>

namespace gregory {

namespace {

// Divides out a gcd unless it is trivially one.
Polynomial drop(const Polynomial& p, const Polynomial& g) {
    return g.is_constant() ? p : exact_quotient(p, g);
}

}  // namespace

RationalFunction::RationalFunction(const Rational& c)
    : num_(Polynomial::constant(c)), den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(const Polynomial& p) : num_(p), den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) {
        throw ArithmeticError("rational function with zero denominator");
    }
    if (num.is_zero()) {
        den_ = Polynomial::constant(1);
        return;
    }
    const Polynomial g = gcd(num, den);
    *this = RationalFunction(drop(num, g), drop(den, g), Reduced{});
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den, Reduced) {
    if (num.is_zero()) {
        den_ = Polynomial::constant(1);
        return;
    }
    const Rational lead = den.leading();
    if (lead.is_one()) {
        num_ = std::move(num);
        den_ = std::move(den);
    } else {
        const Rational inv = lead.inverse();
        num_ = num.scaled(inv);
        den_ = den.scaled(inv);
    }
}

RationalFunction RationalFunction::from_coprime(Polynomial num, Polynomial den) {
    if (den.is_zero()) {
        throw ArithmeticError("rational function with zero denominator");
    }
    return RationalFunction(std::move(num), std::move(den), Reduced{});
}

RationalFunction RationalFunction::q_power(long exponent) {
    if (exponent >= 0) {
        return RationalFunction(Polynomial::monomial(1, static_cast<unsigned>(exponent)));
    }
    return RationalFunction(Polynomial::constant(1), Polynomial::monomial(1, static_cast<unsigned>(-exponent)),
                            Reduced{});
}

Rational RationalFunction::eval(const Rational& v) const {
    const Rational d = den_.eval(v);
    if (d.is_zero()) {
        throw PoleError("rational function has a pole at q = " + v.str());
    }
    return num_.eval(v) / d;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) {
        throw ArithmeticError("inverse of the zero rational function");
    }
    return RationalFunction(den_, num_, Reduced{});
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Reduced{}); }

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
    if (rhs.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = rhs;
    }
    if (den_ == rhs.den_) {
        Polynomial n = num_ + rhs.num_;
        if (n.is_zero()) {
            return *this = RationalFunction();
        }
        const Polynomial g = gcd(n, den_);
        return *this = RationalFunction(drop(n, g), drop(den_, g), Reduced{});
    }
    const Polynomial g = gcd(den_, rhs.den_);
    const Polynomial left_cof = drop(den_, g);
    const Polynomial right_cof = drop(rhs.den_, g);
    Polynomial n = num_ * right_cof + rhs.num_ * left_cof;
    if (n.is_zero()) {
        return *this = RationalFunction();
    }
    Polynomial d = den_ * right_cof;
    if (!g.is_constant()) {
        const Polynomial h = gcd(n, g);
        n = drop(n, h);
        d = drop(d, h);
    }
    return *this = RationalFunction(std::move(n), std::move(d), Reduced{});
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
    if (is_zero() || rhs.is_zero()) {
        return *this = RationalFunction();
    }
    const Polynomial g1 = gcd(num_, rhs.den_);
    const Polynomial g2 = gcd(rhs.num_, den_);
    Polynomial n = drop(num_, g1) * drop(rhs.num_, g2);
    Polynomial d = drop(den_, g2) * drop(rhs.den_, g1);
    return *this = RationalFunction(std::move(n), std::move(d), Reduced{});
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
    if (rhs.is_zero()) {
        throw ArithmeticError("division by the zero rational function");
    }
    return *this *= rhs.inverse();
}

std::string RationalFunction::to_string() const {
    if (is_polynomial()) {
        return num_.to_string('q');
    }
    return "(" + num_.to_string('q') + ")/(" + den_.to_string('q') + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

}  // namespace gregory
