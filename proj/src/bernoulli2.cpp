#include "gregory/bernoulli2.hpp"

#include <stdexcept>
#include <string>

#include "gregory/series.hpp"

namespace gregory {

namespace {

void require_nonnegative(long max_index, const char* what) {
    if (max_index < 0) {
        throw std::invalid_argument(std::string(what) + ": max index must be non-negative");
    }
}

std::vector<std::vector<long>> grid(IndexRange outer, IndexRange inner) {
    std::vector<std::vector<long>> cells;
    for (long a = outer.first; a <= outer.last; ++a) {
        for (long b = inner.first; b <= inner.last; ++b) {
            cells.push_back({a, b});
        }
    }
    return cells;
}

nlohmann::ordered_json range_json(IndexRange r) { return nlohmann::ordered_json::array({r.first, r.last}); }

std::optional<Mismatch> compare_polys(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs == rhs) {
        return std::nullopt;
    }
    return Mismatch{lhs.to_string(), rhs.to_string()};
}

}  // namespace

// Runs b_n = sum_{k=1..n} (-1)^(k+1) b_{n-k}/(k+1) on the integers
// a_n = b_n * scale with scale = M! lcm(1..M+1). Since n! b_n has a
// denominator dividing lcm(1..n+1), every a_n is an integer. Each term
// a_{n-k}/(k+1) is split into quotient and small remainder so the only
// non-integral part is a sum of fractions over lcm(1..n+1).
B2Table b2_compute(long max_index) {
    require_nonnegative(max_index, "b2_compute");
    const auto M = static_cast<unsigned long>(max_index);
    mpz_class lcm_all = 1;
    for (unsigned long d = 2; d <= M + 1; ++d) {
        mpz_lcm_ui(lcm_all.get_mpz_t(), lcm_all.get_mpz_t(), d);
    }
    mpz_class scale;
    mpz_fac_ui(scale.get_mpz_t(), M);
    scale *= lcm_all;

    std::vector<mpz_class> lcm_over;  // lcm_all/(k+1)
    for (unsigned long k = 0; k <= M; ++k) {
        lcm_over.emplace_back(lcm_all / (k + 1));
    }

    std::vector<mpz_class> a{scale};
    a.reserve(M + 1);
    mpz_class whole;
    mpz_class fractional;
    mpz_class quotient;
    for (unsigned long n = 1; n <= M; ++n) {
        whole = 0;
        fractional = 0;
        for (unsigned long k = 1; k <= n; ++k) {
            const unsigned long r = mpz_fdiv_q_ui(quotient.get_mpz_t(), a[n - k].get_mpz_t(), k + 1);
            if (k % 2 == 1) {
                whole += quotient;
                mpz_addmul_ui(fractional.get_mpz_t(), lcm_over[k].get_mpz_t(), r);
            } else {
                whole -= quotient;
                mpz_submul_ui(fractional.get_mpz_t(), lcm_over[k].get_mpz_t(), r);
            }
        }
        if (!mpz_divisible_p(fractional.get_mpz_t(), lcm_all.get_mpz_t())) {
            throw std::logic_error("b2_compute: scaled recurrence left a fractional part");
        }
        mpz_divexact(fractional.get_mpz_t(), fractional.get_mpz_t(), lcm_all.get_mpz_t());
        a.emplace_back(whole + fractional);
    }

    std::vector<Rational> b;
    b.reserve(M + 1);
    for (const auto& x : a) {
        b.emplace_back(x, scale);
    }
    return B2Table(std::move(b));
}

B2Table b2_by_series(long max_index) {
    require_nonnegative(max_index, "b2_by_series");
    return B2Table(series_invert(log_series(static_cast<std::size_t>(max_index))).coeffs());
}

Rational b2e_residual(const B2Table& table, long n) {
    Rational acc;
    for (long k = 0; k <= n; ++k) {
        Rational term = table.at(n - k) / Rational(k + 1);
        if (k % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc;
}

ATable::ATable(std::vector<std::vector<Polynomial>> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].size() != i + 1) {
            throw std::invalid_argument("a-table row " + std::to_string(i + 1) + " must hold " +
                                        std::to_string(i + 1) + " polynomials");
        }
    }
}

const Polynomial& ATable::at(int N, int k) const {
    static const Polynomial zero;
    if (N < 1 || N > max_order()) {
        throw std::out_of_range("a-table has no row N = " + std::to_string(N));
    }
    if (k < 0 || k >= N) {
        return zero;
    }
    return rows_[static_cast<std::size_t>(N - 1)][static_cast<std::size_t>(k)];
}

ATable a_table_build(int max_order) {
    if (max_order < 1) {
        throw std::invalid_argument("a_table_build: N_max must be at least 1");
    }
    std::vector<std::vector<Polynomial>> rows;
    rows.push_back({Polynomial::constant(1)});
    for (int N = 2; N <= max_order; ++N) {
        const auto& prev = rows.back();
        const Polynomial left = Polynomial::linear_factor(N - 1);   // x - N + 1
        const Polynomial right = Polynomial::linear_factor(N);      // x - N
        const Rational scale = Rational(-1, N - 1);
        std::vector<Polynomial> row;
        row.reserve(static_cast<std::size_t>(N));
        for (int k = 0; k < N; ++k) {
            Polynomial sum;
            if (k < N - 1) {
                sum += left * prev[static_cast<std::size_t>(k)];
            }
            if (k >= 1) {
                sum += right * prev[static_cast<std::size_t>(k - 1)].taylor_shift(-1);
            }
            row.push_back(sum.scaled(scale));
        }
        rows.push_back(std::move(row));
    }
    return ATable(std::move(rows));
}

Rational s_convolve(const B2Table& table, int N, long n) {
    if (N < 1) {
        throw std::invalid_argument("s_convolve: N must be positive");
    }
    if (n < 0) {
        return {};
    }
    if (!table.covers(n)) {
        throw std::out_of_range("s_convolve: table ends at " + std::to_string(table.max_index()) +
                                ", need index " + std::to_string(n));
    }
    return ConvolutionPowers(table, N, n).at(N, n);
}

ConvolutionPowers::ConvolutionPowers(const B2Table& table, int max_order, long max_index) {
    if (max_order < 1 || max_index < 0) {
        throw std::invalid_argument("ConvolutionPowers: need N_max >= 1 and n_max >= 0");
    }
    const auto len = static_cast<std::size_t>(max_index) + 1;
    std::vector<Rational> base(len);
    for (std::size_t i = 0; i < len; ++i) {
        base[i] = table.at(static_cast<long>(i));
    }
    rows_.push_back(base);
    for (int N = 2; N <= max_order; ++N) {
        const auto& prev = rows_.back();
        std::vector<Rational> next(len);
        for (std::size_t n = 0; n < len; ++n) {
            Rational acc;
            for (std::size_t j = 0; j <= n; ++j) {
                if (!base[j].is_zero()) {
                    acc += base[j] * prev[n - j];
                }
            }
            next[n] = std::move(acc);
        }
        rows_.push_back(std::move(next));
    }
}

const Rational& ConvolutionPowers::at(int N, long n) const {
    static const Rational zero;
    if (N < 1 || N > max_order()) {
        throw std::out_of_range("no convolution row N = " + std::to_string(N));
    }
    if (n < 0) {
        return zero;
    }
    const auto& row = rows_[static_cast<std::size_t>(N - 1)];
    if (static_cast<std::size_t>(n) >= row.size()) {
        throw std::out_of_range("convolution row ends before index " + std::to_string(n));
    }
    return row[static_cast<std::size_t>(n)];
}

Rational s_closed_form(const ATable& atable, const B2Table& btable, int N, long n) {
    if (N < 1 || N > atable.max_order()) {
        throw std::out_of_range("s_closed_form: N = " + std::to_string(N) + " outside the a-table");
    }
    Rational acc;
    const Rational x(n);
    for (int k = 0; k < N; ++k) {
        const Rational& b = btable.at(n - k);
        if (!b.is_zero()) {
            acc += atable.at(N, k).eval(x) * b;
        }
    }
    return acc;
}

VerificationReport verify_theorem1(const B2Table& table, IndexRange N_range, IndexRange n_range, unsigned jobs) {
    if (N_range.empty() || n_range.empty() || N_range.first < 1 || n_range.first < 0) {
        throw std::invalid_argument("verify_theorem1: need 1 <= N ranges and 0 <= n ranges, both nonempty");
    }
    if (!table.covers(n_range.last)) {
        throw std::out_of_range("verify_theorem1: b-table ends at " + std::to_string(table.max_index()));
    }
    const auto max_order = static_cast<int>(N_range.last);
    const ConvolutionPowers powers(table, max_order, n_range.last);
    const ATable atable = a_table_build(max_order);
    nlohmann::ordered_json params = {{"N", range_json(N_range)}, {"n", range_json(n_range)}};
    return run_grid(
        "thm1", std::move(params), {"N", "n"}, grid(N_range, n_range),
        [&](std::span<const long> c) {
            const int N = static_cast<int>(c[0]);
            return compare_sides(powers.at(N, c[1]), s_closed_form(atable, table, N, c[1]));
        },
        jobs);
}

VerificationReport verify_theorem1(IndexRange N_range, IndexRange n_range, unsigned jobs) {
    return verify_theorem1(b2_compute(std::max(n_range.last, 0L)), N_range, n_range, jobs);
}

VerificationReport verify_b2e(long n_max, unsigned jobs) {
    require_nonnegative(n_max, "verify_b2e");
    const B2Table table = b2_compute(n_max);
    std::vector<std::vector<long>> cells;
    for (long n = 0; n <= n_max; ++n) {
        cells.push_back({n});
    }
    return run_grid(
        "b2e", {{"n", range_json({0, n_max})}}, {"n"}, cells,
        [&](std::span<const long> c) {
            return compare_sides(b2e_residual(table, c[0]), Rational(c[0] == 0 ? 1 : 0));
        },
        jobs);
}

VerificationReport verify_s2s3() {
    const ATable a = a_table_build(3);
    const auto x = [](long root) { return Polynomial::linear_factor(root); };
    const Polynomial two_x_minus_5({Rational(-5), Rational(2)});
    const Rational half(1, 2);
    // (N, k) -> closed form from the N = 2, 3 product formulas
    const std::vector<std::pair<std::vector<long>, Polynomial>> expected = {
        {{2, 0}, -x(1)},
        {{2, 1}, -x(2)},
        {{3, 0}, half * (x(1) * x(2))},
        {{3, 1}, half * (x(2) * two_x_minus_5)},
        {{3, 2}, half * (x(3) * x(3))},
    };
    std::vector<std::vector<long>> cells;
    for (const auto& e : expected) {
        cells.push_back(e.first);
    }
    return run_grid("s2s3", {{"N", nlohmann::ordered_json::array({2, 3})}}, {"N", "k"}, cells,
                    [&](std::span<const long> c) {
                        for (const auto& [key, poly] : expected) {
                            if (key[0] == c[0] && key[1] == c[1]) {
                                return compare_polys(a.at(static_cast<int>(c[0]), static_cast<int>(c[1])), poly);
                            }
                        }
                        throw std::logic_error("unknown s2s3 cell");
                    });
}

VerificationReport verify_boundary_lines(int max_order) {
    const ATable a = a_table_build(max_order);
    std::vector<std::vector<long>> cells;
    for (long N = 1; N <= max_order; ++N) {
        cells.push_back({N, 0});
        if (N > 1) {
            cells.push_back({N, N - 1});
        }
    }
    return run_grid("boundary", {{"N", range_json({1, max_order})}}, {"N", "k"}, cells,
                    [&](std::span<const long> c) {
                        const int N = static_cast<int>(c[0]);
                        const Rational scale = Rational(N % 2 == 1 ? 1 : -1) / factorial(static_cast<unsigned>(N - 1));
                        Polynomial expected = Polynomial::constant(scale);
                        for (int i = 1; i < N; ++i) {
                            expected *= Polynomial::linear_factor(c[1] == 0 ? i : N);
                        }
                        return compare_polys(a.at(N, static_cast<int>(c[1])), expected);
                    });
}

}  // namespace gregory
