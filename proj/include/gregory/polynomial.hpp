#pragma once

#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "gregory/rational.hpp"

namespace gregory {

// Dense univariate polynomial over the rationals, coefficients in ascending
// degree. Trailing zeros are never stored, so the zero polynomial is the
// empty coefficient list.
class Polynomial {
public:
    // Degree reported for the zero polynomial.
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coeffs);
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, unsigned degree);
    // x - root
    static Polynomial linear_factor(const Rational& root);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
    // Coefficient of x^i; zero past the degree.
    Rational coeff(std::size_t i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& v) const;
    // p(x + shift)
    Polynomial taylor_shift(const Rational& shift) const;
    Polynomial monic() const;
    Polynomial scaled(const Rational& c) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    // Human-readable form in the given variable, e.g. "1/2*x^2 - 3*x + 1".
    std::string to_string(char var = 'x') const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

// Euclidean division; throws ArithmeticError when the divisor is zero.
DivMod divmod(const Polynomial& dividend, const Polynomial& divisor);
// Quotient of a division known to be exact; throws ArithmeticError otherwise.
Polynomial exact_quotient(const Polynomial& dividend, const Polynomial& divisor);

// Monic gcd by the Euclidean algorithm. gcd(0, 0) throws ArithmeticError.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace gregory
