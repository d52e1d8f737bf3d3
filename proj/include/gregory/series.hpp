#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gregory/rational.hpp"
#include "gregory/rational_function.hpp"

namespace gregory {

// Coefficient types for TruncatedSeries: exact fields with integer
// embedding and structural equality.
template <typename C>
concept Field = std::regular<C> && std::constructible_from<C, long> && requires(const C a, const C b) {
    { a + b } -> std::convertible_to<C>;
    { a - b } -> std::convertible_to<C>;
    { a * b } -> std::convertible_to<C>;
    { a / b } -> std::convertible_to<C>;
    { -a } -> std::convertible_to<C>;
    { a.is_zero() } -> std::convertible_to<bool>;
};

// Power series c_0 + c_1 t + ... + c_M t^M, taken mod t^(M+1).
template <Field C>
class TruncatedSeries {
public:
    // Series of order M from the given coefficients; missing entries are
    // zero and extra entries are dropped.
    TruncatedSeries(std::vector<C> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1, C(0));
    }
    explicit TruncatedSeries(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) {
            throw std::invalid_argument("truncated series needs at least one coefficient");
        }
    }

    static TruncatedSeries one(std::size_t order) {
        std::vector<C> c(order + 1, C(0));
        c[0] = C(1);
        return TruncatedSeries(std::move(c));
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const C& operator[](std::size_t i) const { return coeffs_.at(i); }
    const std::vector<C>& coeffs() const { return coeffs_; }

    TruncatedSeries truncated(std::size_t order) const {
        return TruncatedSeries(std::vector<C>(coeffs_.begin(), coeffs_.begin() + std::min(order, this->order()) + 1));
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<C> coeffs_;
};

// Cauchy product, truncated to the smaller of the two orders.
template <Field C>
TruncatedSeries<C> series_mul(const TruncatedSeries<C>& f, const TruncatedSeries<C>& g) {
    const std::size_t order = std::min(f.order(), g.order());
    std::vector<C> out(order + 1, C(0));
    for (std::size_t i = 0; i <= order; ++i) {
        if (f[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= order; ++j) {
            out[i + j] = out[i + j] + f[i] * g[j];
        }
    }
    return TruncatedSeries<C>(std::move(out));
}

// Multiplicative inverse mod t^(M+1) via g_n = -(1/c_0) sum_{k=1..n} c_k g_{n-k}.
template <Field C>
TruncatedSeries<C> series_invert(const TruncatedSeries<C>& f) {
    if (f[0].is_zero()) {
        throw ArithmeticError("series with zero constant term is not invertible");
    }
    const C inv0 = C(1) / f[0];
    std::vector<C> g(f.order() + 1, C(0));
    g[0] = inv0;
    for (std::size_t n = 1; n <= f.order(); ++n) {
        C acc(0);
        for (std::size_t k = 1; k <= n; ++k) {
            if (!f[k].is_zero()) {
                acc = acc + f[k] * g[n - k];
            }
        }
        g[n] = -(acc * inv0);
    }
    return TruncatedSeries<C>(std::move(g));
}

template <Field C>
TruncatedSeries<C> series_pow(const TruncatedSeries<C>& f, unsigned exponent) {
    if (exponent == 0) {
        throw std::invalid_argument("series_pow needs a positive exponent");
    }
    TruncatedSeries<C> result = f;
    TruncatedSeries<C> base = f;
    bool have = false;
    while (exponent > 0) {
        if (exponent & 1u) {
            result = have ? series_mul(result, base) : base;
            have = true;
        }
        exponent >>= 1u;
        if (exponent > 0) {
            base = series_mul(base, base);
        }
    }
    return result;
}

// log(1+t)/t to order M: entry n is (-1)^n/(n+1).
TruncatedSeries<Rational> log_series(std::size_t order);
// log_q(1+t)/t to order M: entry n is (-1)^n/[n+1]_q.
TruncatedSeries<RationalFunction> qlog_series(std::size_t order);

}  // namespace gregory
