#include "gregory/format.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace gregory::format {

namespace {

std::string joined_coeffs(const Polynomial& p) {
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        out += (i ? ";" : "") + p.coeffs()[i].str();
    }
    return out.empty() ? "0/1" : out;
}

template <typename Table>
std::string csv_sequence(const Table& t) {
    std::ostringstream os;
    for (long n = 0; n <= t.max_index(); ++n) {
        os << n << ',' << t.at(n).str() << '\n';
    }
    return os.str();
}

template <typename Table>
std::string latex_sequence(const Table& t, const char* symbol) {
    std::ostringstream os;
    for (long n = 0; n <= t.max_index(); ++n) {
        os << symbol << "_{" << n << "} &= " << latex_rational(t.at(n)) << " \\\\\n";
    }
    return os.str();
}

std::string power_suffix(unsigned m) { return m > 1 ? "^{" + std::to_string(m) + "}" : ""; }

// Divisors of n when n is small enough to enumerate.
std::vector<unsigned long> small_divisors(const mpz_class& n) {
    constexpr unsigned long kLimit = 1'000'000'000'000UL;
    if (n > kLimit) {
        return {};
    }
    const unsigned long v = n.get_ui();
    std::vector<unsigned long> out;
    for (unsigned long d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            if (d * d != v) {
                out.push_back(v / d);
            }
        }
    }
    return out;
}

// sum a_i p^i q^(n-i) == 0, i.e. a(p/q) == 0 without fractions.
bool is_root(const std::vector<mpz_class>& a, long p, unsigned long q) {
    mpz_class acc = 0;
    mpz_class qpow = 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        acc = acc * p + a[i] * qpow;
        qpow *= q;
    }
    return acc == 0;
}

struct LinearFactor {
    long p;
    unsigned long q;
    unsigned multiplicity;
};

// a = (q x - p) b over the integers.
std::vector<mpz_class> divide_linear(const std::vector<mpz_class>& a, long p, unsigned long q) {
    const std::size_t n = a.size() - 1;
    std::vector<mpz_class> b(n);
    mpz_class upper = 0;  // b_i, starting above the top
    for (std::size_t i = n; i >= 1; --i) {
        mpz_class value = a[i] + upper * p;
        mpz_divexact_ui(value.get_mpz_t(), value.get_mpz_t(), q);
        b[i - 1] = value;
        upper = value;
    }
    return b;
}

// 2 max_i |a_{n-i}/a_n|^(1/i) bounds every complex root.
double root_bound(const std::vector<mpz_class>& a) {
    const std::size_t n = a.size() - 1;
    const double lead = std::fabs(a[n].get_d());
    double bound = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        const double ratio = std::fabs(a[n - i].get_d()) / lead;
        bound = std::max(bound, std::pow(ratio, 1.0 / static_cast<double>(i)));
    }
    return 2 * bound;
}

std::string latex_integer_linear(char var, long p, unsigned long q) {
    std::string s = "(";
    if (q != 1) {
        s += std::to_string(q);
    }
    s += var;
    if (p > 0) {
        s += "-" + std::to_string(p);
    } else if (p < 0) {
        s += "+" + std::to_string(-p);
    }
    return s + ")";
}

}  // namespace

std::string latex_rational(const Rational& r) {
    if (r.is_integer()) {
        return r.numerator().get_str();
    }
    const std::string sign = r.sign() < 0 ? "-" : "";
    mpz_class num = abs(r.numerator());
    return sign + "\\frac{" + num.get_str() + "}{" + r.denominator().get_str() + "}";
}

std::string latex_polynomial(const Polynomial& p, char var) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        const Rational& c = p.coeffs()[i];
        if (c.is_zero()) {
            continue;
        }
        const Rational mag = c.sign() < 0 ? -c : c;
        if (out.empty()) {
            out += c.sign() < 0 ? "-" : "";
        } else {
            out += c.sign() < 0 ? "-" : "+";
        }
        if (!mag.is_one() || i == 0) {
            out += latex_rational(mag);
        }
        if (i > 0) {
            out += var;
        }
        if (i > 1) {
            out += "^{" + std::to_string(i) + "}";
        }
    }
    return out;
}

std::string latex_factored(const Polynomial& poly, char var) {
    if (poly.is_zero()) {
        return "0";
    }
    // poly = scale * x^low * prod (q x - p)^m * rest, rest primitive over Z
    mpz_class den_lcm = 1;
    for (const auto& c : poly.coeffs()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    }
    std::vector<mpz_class> a;
    mpz_class content = 0;
    for (const auto& c : poly.coeffs()) {
        a.push_back(c.numerator() * (den_lcm / c.denominator()));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), a.back().get_mpz_t());
    }
    if (a.back() < 0) {
        content = -content;
    }
    for (auto& x : a) {
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
    }
    Rational scale(content, den_lcm);

    std::size_t low = 0;
    while (a[low] == 0) {
        ++low;
    }
    a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(low));

    std::vector<LinearFactor> factors;
    if (a.size() > 1) {
        const auto qs = small_divisors(a.back());
        const double bound = root_bound(a);
        constexpr double kMaxCandidates = 200'000;
        double work = 0;
        for (auto q : qs) {
            work += 2 * static_cast<double>(q) * bound + 1;
        }
        if (!qs.empty() && std::isfinite(work) && work <= kMaxCandidates) {
            for (auto q : qs) {
                const long reach = static_cast<long>(std::ceil(static_cast<double>(q) * bound));
                for (long p = -reach; p <= reach && a.size() > 1; ++p) {
                    if (p == 0 || std::gcd(static_cast<unsigned long>(std::labs(p)), q) != 1) {
                        continue;
                    }
                    unsigned m = 0;
                    while (a.size() > 1 && is_root(a, p, q)) {
                        a = divide_linear(a, p, q);
                        ++m;
                    }
                    if (m > 0) {
                        factors.push_back({p, q, m});
                    }
                }
            }
        }
    }

    std::string body;
    if (low > 0) {
        body += std::string(1, var) + power_suffix(static_cast<unsigned>(low));
    }
    std::sort(factors.begin(), factors.end(), [](const LinearFactor& x, const LinearFactor& y) {
        return static_cast<double>(x.p) / static_cast<double>(x.q) < static_cast<double>(y.p) / static_cast<double>(y.q);
    });
    for (const auto& f : factors) {
        body += latex_integer_linear(var, f.p, f.q) + power_suffix(f.multiplicity);
    }
    if (a.size() > 1) {
        std::vector<Rational> rest;
        for (const auto& x : a) {
            rest.emplace_back(x);
        }
        body += "(" + latex_polynomial(Polynomial(std::move(rest)), var) + ")";
    }

    std::string out = scale.sign() < 0 ? "-" : "";
    const Rational mag = scale.sign() < 0 ? -scale : scale;
    if (!mag.is_one() || body.empty()) {
        out += latex_rational(mag);
    }
    return out + body;
}

std::string csv(const B2Table& t) { return csv_sequence(t); }
std::string csv(const BTable& t) { return csv_sequence(t); }

std::string csv(const QB2Table& t) {
    std::ostringstream os;
    for (long n = 0; n <= t.max_index(); ++n) {
        const auto& f = t.at(n);
        os << n << ',' << joined_coeffs(f.numerator()) << ',' << joined_coeffs(f.denominator()) << '\n';
    }
    return os.str();
}

std::string csv(const ATable& t) {
    std::ostringstream os;
    for (int N = 1; N <= t.max_order(); ++N) {
        for (int k = 0; k < N; ++k) {
            os << N << ',' << k << ',' << joined_coeffs(t.at(N, k)) << '\n';
        }
    }
    return os.str();
}

std::string csv(const CTable& t) {
    std::ostringstream os;
    for (int N = 1; N <= t.max_order(); ++N) {
        for (int k = 0; k <= (N - 1) / 2; ++k) {
            os << N << ',' << k << ',' << t.at(N, k).str() << '\n';
        }
    }
    return os.str();
}

std::string latex(const B2Table& t) { return latex_sequence(t, "b"); }
std::string latex(const BTable& t) { return latex_sequence(t, "B"); }

std::string latex(const QB2Table& t) {
    std::ostringstream os;
    for (long n = 0; n <= t.max_index(); ++n) {
        const auto& f = t.at(n);
        os << "b_{" << n << "}(q) &= ";
        if (f.is_polynomial()) {
            os << latex_polynomial(f.numerator(), 'q');
        } else {
            os << "\\frac{" << latex_polynomial(f.numerator(), 'q') << "}{" << latex_polynomial(f.denominator(), 'q')
               << "}";
        }
        os << " \\\\\n";
    }
    return os.str();
}

std::string latex(const ATable& t) {
    std::ostringstream os;
    for (int N = 1; N <= t.max_order(); ++N) {
        os << "s_{" << N << "}(n) &= ";
        for (int k = 0; k < N; ++k) {
            std::string coeff = latex_factored(t.at(N, k), 'n');
            const std::string b = k == 0 ? "b_{n}" : "b_{n-" + std::to_string(k) + "}";
            const bool negative = coeff.front() == '-';
            if (negative) {
                coeff.erase(0, 1);
            }
            if (coeff == "1") {
                coeff.clear();
            }
            if (k == 0) {
                os << (negative ? "-" : "");
            } else {
                os << (negative ? " - " : " + ");
            }
            os << coeff << b;
        }
        os << " \\\\\n";
    }
    return os.str();
}

std::string latex(const CTable& t) {
    std::ostringstream os;
    for (int N = 1; N <= t.max_order(); ++N) {
        for (int k = 0; k <= (N - 1) / 2; ++k) {
            os << "c_{" << k << "}^{(" << N << ")} &= " << latex_rational(t.at(N, k)) << " \\\\\n";
        }
    }
    return os.str();
}

}  // namespace gregory::format
