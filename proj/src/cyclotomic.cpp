#include "gregory/cyclotomic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gregory {

namespace {

int moebius(unsigned n) {
    int mu = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return 0;
            }
            mu = -mu;
        }
    }
    return n > 1 ? -mu : mu;
}

// Phi_d = prod_{e | d} (q^e - 1)^mu(d/e), multiplying before dividing.
Polynomial build_cyclotomic(unsigned d) {
    std::vector<long long> c{1};
    std::vector<unsigned> divide_by;
    for (unsigned e = 1; e <= d; ++e) {
        if (d % e != 0) {
            continue;
        }
        const int mu = moebius(d / e);
        if (mu == 1) {
            std::vector<long long> next(c.size() + e, 0);
            for (std::size_t i = 0; i < c.size(); ++i) {
                next[i + e] += c[i];
                next[i] -= c[i];
            }
            c = std::move(next);
        } else if (mu == -1) {
            divide_by.push_back(e);
        }
    }
    for (unsigned e : divide_by) {
        // c = r (q^e - 1)  =>  r_i = r_{i-e} - c_i
        std::vector<long long> r(c.size() - e, 0);
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] = (i >= e ? r[i - e] : 0) - c[i];
        }
        c = std::move(r);
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(c.size());
    for (long long x : c) {
        coeffs.emplace_back(static_cast<long>(x));
    }
    return Polynomial(std::move(coeffs));
}

const std::vector<Polynomial>& cyclotomic_table() {
    static const std::vector<Polynomial> table = [] {
        std::vector<Polynomial> t(kMaxCyclotomicIndex + 1);
        for (unsigned d = 1; d <= kMaxCyclotomicIndex; ++d) {
            t[d] = build_cyclotomic(d);
        }
        return t;
    }();
    return table;
}

Polynomial shift_up(const Polynomial& p, long by) {
    if (by == 0 || p.is_zero()) {
        return p;
    }
    std::vector<Rational> c(static_cast<std::size_t>(by));
    c.insert(c.end(), p.coeffs().begin(), p.coeffs().end());
    return Polynomial(std::move(c));
}

}  // namespace

const Polynomial& cyclotomic_polynomial(unsigned d) {
    if (d == 0 || d > kMaxCyclotomicIndex) {
        throw std::out_of_range("cyclotomic index " + std::to_string(d) + " outside [1, " +
                                std::to_string(kMaxCyclotomicIndex) + "]");
    }
    return cyclotomic_table()[d];
}

CyclotomicFraction::CyclotomicFraction(const Rational& c) : num_(Polynomial::constant(c)) {}

CyclotomicFraction::CyclotomicFraction(Polynomial num) : num_(std::move(num)) {}

void CyclotomicFraction::normalize_q() {
    if (q_exp_ < 0) {
        num_ = shift_up(num_, -q_exp_);
        q_exp_ = 0;
    }
    if (num_.is_zero()) {
        q_exp_ = 0;
        exps_.clear();
    }
}

CyclotomicFraction CyclotomicFraction::q_power(long exponent) {
    CyclotomicFraction out(Rational(1));
    out.q_exp_ = -exponent;
    out.normalize_q();
    return out;
}

CyclotomicFraction CyclotomicFraction::q_integer(long n) {
    if (n == 0) {
        return {};
    }
    const long m = n > 0 ? n : -n;
    std::vector<Rational> ones(static_cast<std::size_t>(m), Rational(1));
    CyclotomicFraction out(Polynomial(std::move(ones)));
    if (n < 0) {
        // [-m]_q = -q^(-m) [m]_q
        out.num_ = -out.num_;
        out.q_exp_ = m;
    }
    return out;
}

CyclotomicFraction CyclotomicFraction::inverse_q_integer(long m) {
    if (m < 1) {
        throw std::invalid_argument("inverse_q_integer needs m >= 1");
    }
    if (m > static_cast<long>(kMaxCyclotomicIndex)) {
        throw std::out_of_range("inverse_q_integer: index past the cyclotomic table");
    }
    CyclotomicFraction out(Rational(1));
    out.exps_.assign(static_cast<std::size_t>(m) + 1, 0);
    for (long d = 2; d <= m; ++d) {
        if (m % d == 0) {
            out.exps_[static_cast<std::size_t>(d)] = 1;
        }
    }
    return out;
}

std::optional<CyclotomicFraction> CyclotomicFraction::factor(const RationalFunction& f) {
    return factor(f.numerator(), f.denominator());
}

std::optional<CyclotomicFraction> CyclotomicFraction::factor(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) {
        throw ArithmeticError("zero denominator");
    }
    CyclotomicFraction out(num);
    if (num.is_zero()) {
        return out;
    }
    const auto& dc = den.coeffs();
    std::size_t low = 0;
    while (dc[low].is_zero()) {
        ++low;
    }
    Polynomial rest(std::vector<Rational>(dc.begin() + static_cast<std::ptrdiff_t>(low), dc.end()));
    out.q_exp_ = static_cast<long>(low);
    for (unsigned d = 1; d <= kMaxCyclotomicIndex && rest.degree() > 0; ++d) {
        const Polynomial& phi = cyclotomic_polynomial(d);
        while (phi.degree() <= rest.degree()) {
            auto [quot, rem] = divmod(rest, phi);
            if (!rem.is_zero()) {
                break;
            }
            rest = std::move(quot);
            if (out.exps_.size() <= d) {
                out.exps_.resize(d + 1, 0);
            }
            ++out.exps_[d];
        }
    }
    if (rest.degree() != 0) {
        return std::nullopt;
    }
    out.num_ = out.num_.scaled(rest.leading().inverse());
    return out;
}

Polynomial CyclotomicFraction::denominator() const {
    Polynomial den = Polynomial::monomial(1, static_cast<unsigned>(q_exp_));
    for (std::size_t d = 1; d < exps_.size(); ++d) {
        for (int i = 0; i < exps_[d]; ++i) {
            den *= cyclotomic_polynomial(static_cast<unsigned>(d));
        }
    }
    return den;
}

CyclotomicFraction CyclotomicFraction::sum(std::span<const CyclotomicFraction> terms) {
    long q_exp = 0;
    std::vector<int> exps;
    for (const auto& t : terms) {
        if (t.is_zero()) {
            continue;
        }
        q_exp = std::max(q_exp, t.q_exp_);
        if (exps.size() < t.exps_.size()) {
            exps.resize(t.exps_.size(), 0);
        }
        for (std::size_t d = 1; d < t.exps_.size(); ++d) {
            exps[d] = std::max(exps[d], t.exps_[d]);
        }
    }
    Polynomial num;
    for (const auto& t : terms) {
        if (t.is_zero()) {
            continue;
        }
        Polynomial cofactor = Polynomial::constant(1);
        for (std::size_t d = 1; d < exps.size(); ++d) {
            for (int i = t.exponent(static_cast<unsigned>(d)); i < exps[d]; ++i) {
                cofactor *= cyclotomic_polynomial(static_cast<unsigned>(d));
            }
        }
        num += shift_up(t.num_ * cofactor, q_exp - t.q_exp_);
    }
    CyclotomicFraction out(std::move(num));
    out.q_exp_ = q_exp;
    out.exps_ = std::move(exps);
    out.normalize_q();
    return out;
}

CyclotomicFraction CyclotomicFraction::reduced() const {
    CyclotomicFraction out = *this;
    if (out.is_zero()) {
        return out;
    }
    long strip = 0;
    while (strip < out.q_exp_ && out.num_.coeff(static_cast<std::size_t>(strip)).is_zero()) {
        ++strip;
    }
    if (strip > 0) {
        const auto& c = out.num_.coeffs();
        out.num_ = Polynomial(std::vector<Rational>(c.begin() + strip, c.end()));
        out.q_exp_ -= strip;
    }
    for (std::size_t d = 1; d < out.exps_.size(); ++d) {
        const Polynomial& phi = cyclotomic_polynomial(static_cast<unsigned>(d));
        while (out.exps_[d] > 0 && out.num_.degree() >= phi.degree()) {
            auto [quot, rem] = divmod(out.num_, phi);
            if (!rem.is_zero()) {
                break;
            }
            out.num_ = std::move(quot);
            --out.exps_[d];
        }
    }
    while (!out.exps_.empty() && out.exps_.back() == 0) {
        out.exps_.pop_back();
    }
    return out;
}

RationalFunction CyclotomicFraction::to_rational_function() const {
    const CyclotomicFraction r = reduced();
    return RationalFunction::from_coprime(r.num_, r.denominator());
}

CyclotomicFraction CyclotomicFraction::operator-() const {
    CyclotomicFraction out = *this;
    out.num_ = -out.num_;
    return out;
}

CyclotomicFraction CyclotomicFraction::scaled(const Rational& c) const {
    CyclotomicFraction out = *this;
    out.num_ = out.num_.scaled(c);
    out.normalize_q();
    return out;
}

CyclotomicFraction operator+(const CyclotomicFraction& a, const CyclotomicFraction& b) {
    const CyclotomicFraction terms[] = {a, b};
    return CyclotomicFraction::sum(terms);
}

CyclotomicFraction operator*(const CyclotomicFraction& a, const CyclotomicFraction& b) {
    CyclotomicFraction out(a.num_ * b.num_);
    if (out.is_zero()) {
        return out;
    }
    out.q_exp_ = a.q_exp_ + b.q_exp_;
    out.exps_.assign(std::max(a.exps_.size(), b.exps_.size()), 0);
    for (std::size_t d = 1; d < out.exps_.size(); ++d) {
        out.exps_[d] = a.exponent(static_cast<unsigned>(d)) + b.exponent(static_cast<unsigned>(d));
    }
    return out;
}

}  // namespace gregory
