#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gregory/polynomial.hpp"
#include "gregory/rational_function.hpp"

namespace gregory {

// Largest index d for which Phi_d is available.
inline constexpr unsigned kMaxCyclotomicIndex = 512;

// The d-th cyclotomic polynomial, 1 <= d <= kMaxCyclotomicIndex.
const Polynomial& cyclotomic_polynomial(unsigned d);

// Element of Q(q) whose denominator is q^s * prod_{d>=1} Phi_d^(e_d), kept in
// that factored form. Sums need no gcd: the common denominator is the
// exponentwise maximum. reduced() cancels common factors by trial division,
// which yields the canonical form because each Phi_d is irreducible over Q.
class CyclotomicFraction {
public:
    CyclotomicFraction() = default;
    CyclotomicFraction(const Rational& c);  // NOLINT
    explicit CyclotomicFraction(Polynomial num);

    static CyclotomicFraction q_power(long exponent);
    // [n]_q for any integer n.
    static CyclotomicFraction q_integer(long n);
    // 1/[m]_q for m >= 1.
    static CyclotomicFraction inverse_q_integer(long m);
    // Factors the denominator of f; nullopt when it is not of the form above.
    static std::optional<CyclotomicFraction> factor(const RationalFunction& f);
    // Same for num/den, which need not be coprime; throws ArithmeticError on
    // a zero denominator.
    static std::optional<CyclotomicFraction> factor(const Polynomial& num, const Polynomial& den);

    static CyclotomicFraction sum(std::span<const CyclotomicFraction> terms);

    bool is_zero() const { return num_.is_zero(); }
    const Polynomial& numerator() const { return num_; }
    long q_exponent() const { return q_exp_; }
    // Exponent of Phi_d in the denominator.
    int exponent(unsigned d) const { return d < exps_.size() ? exps_[d] : 0; }

    CyclotomicFraction reduced() const;
    RationalFunction to_rational_function() const;

    CyclotomicFraction operator-() const;
    CyclotomicFraction scaled(const Rational& c) const;
    friend CyclotomicFraction operator+(const CyclotomicFraction& a, const CyclotomicFraction& b);
    friend CyclotomicFraction operator-(const CyclotomicFraction& a, const CyclotomicFraction& b) { return a + (-b); }
    friend CyclotomicFraction operator*(const CyclotomicFraction& a, const CyclotomicFraction& b);

private:
    void normalize_q();
    Polynomial denominator() const;

    Polynomial num_;
    long q_exp_ = 0;         // power of q in the denominator, >= 0
    std::vector<int> exps_;  // exps_[d] for d >= 1; entry 0 unused
};

}  // namespace gregory
