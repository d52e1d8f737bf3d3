#include "gregory/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace gregory {

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, unsigned degree) {
    std::vector<Rational> coeffs(degree + 1);
    coeffs[degree] = c;
    return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::linear_factor(const Rational& root) { return Polynomial({-root, Rational(1)}); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }

const Rational& Polynomial::leading() const {
    if (coeffs_.empty()) {
        throw ArithmeticError("leading coefficient of the zero polynomial");
    }
    return coeffs_.back();
}

Rational Polynomial::eval(const Rational& v) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= v;
        acc += *it;
    }
    return acc;
}

// Repeated synthetic division by (x - shift): after pass i the entries
// from i upward hold the coefficients of the partially shifted polynomial.
Polynomial Polynomial::taylor_shift(const Rational& shift) const {
    if (shift.is_zero() || is_constant()) {
        return *this;
    }
    std::vector<Rational> c = coeffs_;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = n - 1; j-- > i;) {
            c[j] += shift * c[j + 1];
        }
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::monic() const {
    if (is_zero() || leading().is_one()) {
        return *this;
    }
    return scaled(leading().inverse());
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c.is_zero()) {
        return {};
    }
    Polynomial out = *this;
    for (auto& x : out.coeffs_) {
        x *= c;
    }
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& x : out.coeffs_) {
        x = -x;
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

DivMod divmod(const Polynomial& dividend, const Polynomial& divisor) {
    if (divisor.is_zero()) {
        throw ArithmeticError("polynomial division by zero");
    }
    const int dd = divisor.degree();
    if (dividend.degree() < dd) {
        return {Polynomial(), dividend};
    }
    std::vector<Rational> rem = dividend.coeffs();
    std::vector<Rational> quot(rem.size() - static_cast<std::size_t>(dd));
    const Rational inv_lead = divisor.leading().inverse();
    const auto& d = divisor.coeffs();
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Rational& top = rem[k + static_cast<std::size_t>(dd)];
        if (top.is_zero()) {
            continue;
        }
        Rational factor = top * inv_lead;
        for (std::size_t j = 0; j < d.size(); ++j) {
            rem[k + j] -= factor * d[j];
        }
        quot[k] = std::move(factor);
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_quotient(const Polynomial& dividend, const Polynomial& divisor) {
    auto [q, r] = divmod(dividend, divisor);
    if (!r.is_zero()) {
        throw ArithmeticError("polynomial division is not exact");
    }
    return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) {
        throw ArithmeticError("gcd of two zero polynomials");
    }
    Polynomial x = a.monic();
    Polynomial y = b.monic();
    if (x.degree() < y.degree()) {
        std::swap(x, y);
    }
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).remainder.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

std::string Polynomial::to_string(char var) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) {
            continue;
        }
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            os << (c.sign() < 0 ? "-" : "");
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag.is_one();
        if (!unit || i == 0) {
            os << (mag.is_integer() ? mag.numerator().get_str() : mag.str());
            if (i > 0) {
                os << '*';
            }
        }
        if (i > 0) {
            os << var;
            if (i > 1) {
                os << '^' << i;
            }
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace gregory
