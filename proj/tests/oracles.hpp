#pragma once

// Brute-force reference computations used only by the tests. Each one takes
// a route unrelated to the library code it checks.

#include <functional>
#include <vector>

#include "gregory/polynomial.hpp"
#include "gregory/rational.hpp"

namespace oracle {

using gregory::Polynomial;
using gregory::Rational;

// b_n = (1/n!) * integral_0^1 x(x-1)...(x-n+1) dx
inline Rational b2_integral(unsigned n) {
    Polynomial falling = Polynomial::constant(1);
    for (unsigned i = 0; i < n; ++i) {
        falling *= Polynomial::linear_factor(Rational(static_cast<long>(i)));
    }
    Rational integral = 0;
    for (std::size_t i = 0; i < falling.coeffs().size(); ++i) {
        integral += falling.coeffs()[i] / Rational(static_cast<long>(i + 1));
    }
    return integral / gregory::factorial(n);
}

// Akiyama-Tanigawa; that algorithm yields B_1 = +1/2, flipped here to match
// t/(e^t - 1).
inline std::vector<Rational> bernoulli_akiyama_tanigawa(unsigned max_index) {
    std::vector<Rational> out;
    std::vector<Rational> a(max_index + 1);
    for (unsigned m = 0; m <= max_index; ++m) {
        a[m] = Rational(1, m + 1);
        for (unsigned j = m; j >= 1; --j) {
            a[j - 1] = Rational(static_cast<long>(j)) * (a[j - 1] - a[j]);
        }
        out.push_back(m == 1 ? -a[0] : a[0]);
    }
    return out;
}

// Visits every (j_1..j_parts) of non-negative integers summing to total.
inline void for_each_composition(unsigned total, unsigned parts,
                                 const std::function<void(const std::vector<unsigned>&)>& visit) {
    std::vector<unsigned> j(parts, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned slot, unsigned left) {
        if (slot + 1 == parts) {
            j[slot] = left;
            visit(j);
            return;
        }
        for (unsigned v = 0; v <= left; ++v) {
            j[slot] = v;
            rec(slot + 1, left - v);
        }
    };
    rec(0, total);
}

// s_N(n) as the literal sum over compositions.
inline Rational s_by_compositions(const std::vector<Rational>& b, unsigned N, unsigned n) {
    Rational total = 0;
    for_each_composition(n, N, [&](const std::vector<unsigned>& j) {
        Rational term = 1;
        for (unsigned x : j) {
            term *= b.at(x);
        }
        total += term;
    });
    return total;
}

// Multinomial sum over j_1+...+j_N = n of (2n; 2j_1..2j_N) B_{2j_1}...B_{2j_N}.
inline Rational dilcher_multinomial(const std::vector<Rational>& B, unsigned N, unsigned n) {
    Rational total = 0;
    for_each_composition(n, N, [&](const std::vector<unsigned>& j) {
        Rational term = gregory::factorial(2 * n);
        for (unsigned x : j) {
            term = term / gregory::factorial(2 * x) * B.at(2 * x);
        }
        total += term;
    });
    return total;
}

// p(x + a) by expanding each power binomially.
inline Polynomial shift_binomial(const Polynomial& p, const Rational& a) {
    std::vector<Rational> out(p.coeffs().size());
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            out[j] += p.coeffs()[i] * gregory::binomial(static_cast<unsigned>(i), static_cast<unsigned>(j)) *
                      a.pow(static_cast<long>(i - j));
        }
    }
    return Polynomial(out);
}

// [k]_v = 1 + v + ... + v^(k-1) for k >= 1.
inline Rational q_integer_at(unsigned k, const Rational& v) {
    Rational sum = 0;
    Rational power = 1;
    for (unsigned i = 0; i < k; ++i) {
        sum += power;
        power *= v;
    }
    return sum;
}

// b_0(v)..b_M(v) by inverting sum (-1)^n t^n/[n+1]_v over the rationals.
inline std::vector<Rational> qb2_at(unsigned max_index, const Rational& v) {
    std::vector<Rational> c;
    for (unsigned n = 0; n <= max_index; ++n) {
        c.push_back(Rational(n % 2 == 0 ? 1 : -1) / q_integer_at(n + 1, v));
    }
    std::vector<Rational> g(max_index + 1);
    g[0] = 1;
    for (unsigned n = 1; n <= max_index; ++n) {
        Rational acc = 0;
        for (unsigned k = 1; k <= n; ++k) {
            acc += c[k] * g[n - k];
        }
        g[n] = -acc;
    }
    return g;
}

}  // namespace oracle
