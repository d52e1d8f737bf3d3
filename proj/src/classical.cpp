#include "gregory/classical.hpp"

#include <stdexcept>
#include <string>

#include "gregory/series.hpp"

namespace gregory {

namespace {

void require_nonnegative(long n, const char* what) {
    if (n < 0) {
        throw std::invalid_argument(std::string(what) + ": index must be non-negative");
    }
}

// Rows (sum_j B_{2j} t^j/(2j)!)^N for N = 1..N_max over 0..n_max.
std::vector<std::vector<Rational>> even_exponential_powers(const BTable& table, int max_order, long n_max) {
    const auto len = static_cast<std::size_t>(n_max) + 1;
    std::vector<Rational> base(len);
    for (std::size_t j = 0; j < len; ++j) {
        base[j] = table.at(2 * static_cast<long>(j)) / factorial(2 * static_cast<unsigned>(j));
    }
    std::vector<std::vector<Rational>> rows{base};
    for (int N = 2; N <= max_order; ++N) {
        const auto& prev = rows.back();
        std::vector<Rational> next(len);
        for (std::size_t n = 0; n < len; ++n) {
            Rational acc;
            for (std::size_t j = 0; j <= n; ++j) {
                acc += base[j] * prev[n - j];
            }
            next[n] = std::move(acc);
        }
        rows.push_back(std::move(next));
    }
    return rows;
}

}  // namespace

BTable bernoulli_compute(long max_index) {
    require_nonnegative(max_index, "bernoulli_compute");
    std::vector<Rational> B{Rational(1)};
    for (long n = 1; n <= max_index; ++n) {
        if (n >= 3 && n % 2 == 1) {
            B.emplace_back(0);
            continue;
        }
        // B_n = -1/(n+1) sum_{k=0..n-1} C(n+1, k) B_k
        Rational acc;
        mpz_class binom = 1;  // C(n+1, k)
        for (long k = 0; k < n; ++k) {
            if (!B[static_cast<std::size_t>(k)].is_zero()) {
                acc += Rational(binom) * B[static_cast<std::size_t>(k)];
            }
            binom *= n + 1 - k;
            binom /= k + 1;
        }
        B.push_back(-acc / Rational(n + 1));
    }
    return BTable(std::move(B));
}

BTable bernoulli_by_series(long max_index) {
    require_nonnegative(max_index, "bernoulli_by_series");
    const auto order = static_cast<std::size_t>(max_index);
    std::vector<Rational> c;
    for (std::size_t n = 0; n <= order; ++n) {
        c.push_back(factorial(static_cast<unsigned>(n + 1)).inverse());
    }
    const auto inverse = series_invert(TruncatedSeries<Rational>(std::move(c)));
    std::vector<Rational> B;
    for (std::size_t n = 0; n <= order; ++n) {
        B.push_back(inverse[n] * factorial(static_cast<unsigned>(n)));
    }
    return BTable(std::move(B));
}

CTable::CTable(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].size() != i / 2 + 1) {
            throw std::invalid_argument("c-table row " + std::to_string(i + 1) + " has the wrong length");
        }
    }
}

const Rational& CTable::at(int N, int k) const {
    static const Rational zero;
    if (N > max_order()) {
        throw std::out_of_range("c-table has no row N = " + std::to_string(N));
    }
    if (N < 1 || k < 0 || k > (N - 1) / 2) {
        return zero;
    }
    return rows_[static_cast<std::size_t>(N - 1)][static_cast<std::size_t>(k)];
}

CTable c_table_build(int max_order) {
    if (max_order < 1) {
        throw std::invalid_argument("c_table_build: N_max must be at least 1");
    }
    std::vector<std::vector<Rational>> rows{{Rational(1)}};
    const auto entry = [&rows](int N, int k) -> Rational {
        if (N < 1 || k < 0 || k > (N - 1) / 2) {
            return {};
        }
        return rows[static_cast<std::size_t>(N - 1)][static_cast<std::size_t>(k)];
    };
    for (int N = 1; N < max_order; ++N) {
        // row N + 1
        std::vector<Rational> row;
        for (int k = 0; k <= N / 2; ++k) {
            row.push_back(-entry(N, k) / Rational(N) + entry(N - 1, k - 1) / Rational(4));
        }
        rows.push_back(std::move(row));
    }
    return CTable(std::move(rows));
}

Rational euler_lhs(const BTable& table, long n) {
    Rational acc;
    for (long j = 1; j <= n - 1; ++j) {
        acc += binomial(2 * static_cast<unsigned>(n), 2 * static_cast<unsigned>(j)) * table.at(2 * j) *
               table.at(2 * n - 2 * j);
    }
    return acc;
}

Rational euler_rhs(const BTable& table, long n) { return Rational(-(2 * n + 1)) * table.at(2 * n); }

VerificationReport verify_euler(long n_max, unsigned jobs) {
    if (n_max < 2) {
        throw std::invalid_argument("verify_euler: the identity needs n > 1");
    }
    const BTable table = bernoulli_compute(2 * n_max);
    std::vector<std::vector<long>> cells;
    for (long n = 2; n <= n_max; ++n) {
        cells.push_back({n});
    }
    return run_grid(
        "euler", {{"n", {2, n_max}}}, {"n"}, cells,
        [&](std::span<const long> c) { return compare_sides(euler_lhs(table, c[0]), euler_rhs(table, c[0])); },
        jobs);
}

Rational dilcher_lhs(const BTable& table, int N, long n) {
    if (N < 1) {
        throw std::invalid_argument("dilcher_lhs: N must be positive");
    }
    if (n < 0) {
        return {};
    }
    const auto rows = even_exponential_powers(table, N, n);
    return rows.back()[static_cast<std::size_t>(n)] * factorial(2 * static_cast<unsigned>(n));
}

Rational dilcher_rhs(const BTable& btable, const CTable& ctable, int N, long n) {
    if (2 * n < N) {
        throw std::invalid_argument("dilcher_rhs: needs 2n >= N");
    }
    Rational sum;
    for (int k = 0; k <= (N - 1) / 2; ++k) {
        const long m = 2 * n - 2 * k;
        if (m <= 0) {
            throw std::invalid_argument("dilcher_rhs: index 2n - 2k must be positive");
        }
        sum += ctable.at(N, k) * btable.at(m) / Rational(m);
    }
    const auto two_n = static_cast<unsigned>(2 * n);
    return factorial(two_n) / factorial(two_n - static_cast<unsigned>(N)) * sum;
}

VerificationReport verify_dilcher(int max_order, long n_max, unsigned jobs) {
    if (max_order < 1 || n_max < 1) {
        throw std::invalid_argument("verify_dilcher: need N_max >= 1 and n_max >= 1");
    }
    const BTable btable = bernoulli_compute(2 * n_max);
    const CTable ctable = c_table_build(max_order);
    const auto powers = even_exponential_powers(btable, max_order, n_max);
    std::vector<std::vector<long>> cells;
    for (long N = 1; N <= max_order; ++N) {
        for (long n = N / 2 + 1; n <= n_max; ++n) {
            cells.push_back({N, n});
        }
    }
    return run_grid(
        "dilcher", {{"N", {1, max_order}}, {"n", {1, n_max}}, {"condition", "2n > N"}}, {"N", "n"}, cells,
        [&](std::span<const long> c) {
            const int N = static_cast<int>(c[0]);
            const long n = c[1];
            const Rational lhs =
                powers[static_cast<std::size_t>(N - 1)][static_cast<std::size_t>(n)] * factorial(2 * static_cast<unsigned>(n));
            return compare_sides(lhs, dilcher_rhs(btable, ctable, N, n));
        },
        jobs);
}

}  // namespace gregory
