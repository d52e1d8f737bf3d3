#include "gregory/qbernoulli2.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "gregory/cyclotomic.hpp"
#include "gregory/series.hpp"

namespace gregory {

namespace {

void require_nonnegative(long n, const char* what) {
    if (n < 0) {
        throw std::invalid_argument(std::string(what) + ": index must be non-negative");
    }
}

std::vector<std::vector<long>> index_cells(long n_max) {
    std::vector<std::vector<long>> cells;
    for (long n = 0; n <= n_max; ++n) {
        cells.push_back({n});
    }
    return cells;
}

std::optional<Mismatch> compare_functions(const RationalFunction& lhs, const RationalFunction& rhs) {
    if (lhs == rhs) {
        return std::nullopt;
    }
    return Mismatch{lhs.to_string(), rhs.to_string()};
}

// Cyclotomic-factored copies of table[0..n_max], or nullopt when some entry
// has a denominator outside that family.
std::optional<std::vector<CyclotomicFraction>> factored_prefix(const QB2Table& table, long n_max) {
    std::vector<CyclotomicFraction> out;
    for (long i = 0; i <= n_max; ++i) {
        auto f = CyclotomicFraction::factor(table.at(i));
        if (!f) {
            return std::nullopt;
        }
        out.push_back(std::move(*f));
    }
    return out;
}

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) {
                n /= p;
            }
            result -= result / p;
        }
    }
    if (n > 1) {
        result -= result / n;
    }
    return result;
}

// b_0(v)..b_{n_max}(v) with q specialised to v. Throws ArithmeticError when
// some [j+1]_v vanishes.
std::vector<Rational> specialised_table(long n_max, const Rational& v) {
    std::vector<Rational> inv_qint;  // 1/[j+1]_v
    for (long j = 0; j <= n_max; ++j) {
        inv_qint.push_back(q_integer(j + 1).eval(v).inverse());
    }
    std::vector<Rational> b{Rational(1)};
    for (long n = 1; n <= n_max; ++n) {
        Rational acc;
        for (long j = 1; j <= n; ++j) {
            Rational term = b[static_cast<std::size_t>(n - j)] * inv_qint[static_cast<std::size_t>(j)];
            if (j % 2 == 0) {
                acc -= term;
            } else {
                acc += term;
            }
        }
        b.push_back(std::move(acc));
    }
    return b;
}

struct SpecialisedSides {
    std::vector<Rational> lhs;
    std::vector<Rational> rhs;
};

SpecialisedSides specialised_sides(long n_max, const Rational& v) {
    const std::vector<Rational> b = specialised_table(n_max, v);
    const auto at = [&](long i) { return i < 0 ? Rational() : b[static_cast<std::size_t>(i)]; };
    const Rational v_inv = v.inverse();
    SpecialisedSides out;
    for (long n = 0; n <= n_max; ++n) {
        Rational lhs;
        Rational power = v_inv;  // v^(k-1)
        for (long k = 0; k <= n; ++k) {
            lhs += power * at(k) * at(n - k);
            power *= v;
        }
        Rational rhs = -(q_integer(n - 1).eval(v) * at(n));
        if (n >= 1) {
            rhs -= q_integer(n - 2).eval(v) * at(n - 1);
        }
        out.lhs.push_back(std::move(lhs));
        out.rhs.push_back(std::move(rhs));
    }
    return out;
}

}  // namespace

RationalFunction q_integer(long n) {
    static const RationalFunction one(1);
    static const RationalFunction one_minus_q(Polynomial{Rational(1), Rational(-1)});
    return (one - RationalFunction::q_power(n)) / one_minus_q;
}

QB2Table qb2_compute(long max_index) {
    require_nonnegative(max_index, "qb2_compute");
    std::vector<CyclotomicFraction> inv_qint;  // 1/[j+1]_q
    for (long j = 0; j <= max_index; ++j) {
        inv_qint.push_back(CyclotomicFraction::inverse_q_integer(j + 1));
    }
    std::vector<CyclotomicFraction> b{CyclotomicFraction(Rational(1))};
    std::vector<RationalFunction> values{RationalFunction(1)};
    for (long n = 1; n <= max_index; ++n) {
        std::vector<CyclotomicFraction> terms;
        terms.reserve(static_cast<std::size_t>(n));
        for (long j = 1; j <= n; ++j) {
            CyclotomicFraction term = b[static_cast<std::size_t>(n - j)] * inv_qint[static_cast<std::size_t>(j)];
            terms.push_back(j % 2 == 0 ? -term : term);
        }
        b.push_back(CyclotomicFraction::sum(terms).reduced());
        values.push_back(b.back().to_rational_function());
    }
    return QB2Table(std::move(values));
}

QB2Table qb2_by_series(long max_index) {
    require_nonnegative(max_index, "qb2_by_series");
    return QB2Table(series_invert(qlog_series(static_cast<std::size_t>(max_index))).coeffs());
}

RationalFunction b2r_residual(const QB2Table& table, long n) {
    require_nonnegative(n, "b2r_residual");
    if (auto b = factored_prefix(table, n)) {
        std::vector<CyclotomicFraction> terms;
        for (long k = 0; k <= n; ++k) {
            CyclotomicFraction term = (*b)[static_cast<std::size_t>(n - k)] * CyclotomicFraction::inverse_q_integer(k + 1);
            terms.push_back(k % 2 == 0 ? term : -term);
        }
        return CyclotomicFraction::sum(terms).to_rational_function();
    }
    RationalFunction acc;
    for (long k = 0; k <= n; ++k) {
        RationalFunction term = table.at(n - k) / q_integer(k + 1);
        if (k % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc;
}

RationalFunction qtheorem2_lhs(const QB2Table& table, long n) {
    require_nonnegative(n, "qtheorem2_lhs");
    if (!table.covers(n)) {
        throw std::out_of_range("qtheorem2_lhs: table ends at " + std::to_string(table.max_index()));
    }
    if (auto b = factored_prefix(table, n)) {
        std::vector<CyclotomicFraction> terms;
        for (long k = 0; k <= n; ++k) {
            terms.push_back(CyclotomicFraction::q_power(k - 1) * (*b)[static_cast<std::size_t>(k)] *
                            (*b)[static_cast<std::size_t>(n - k)]);
        }
        return CyclotomicFraction::sum(terms).to_rational_function();
    }
    RationalFunction acc;
    for (long k = 0; k <= n; ++k) {
        acc += RationalFunction::q_power(k - 1) * table.at(k) * table.at(n - k);
    }
    return acc;
}

RationalFunction qtheorem2_rhs(const QB2Table& table, long n) {
    require_nonnegative(n, "qtheorem2_rhs");
    const auto bn = CyclotomicFraction::factor(table.at(n));
    const auto bn1 = CyclotomicFraction::factor(table.at(n - 1));
    if (bn && bn1) {
        const CyclotomicFraction terms[] = {-(CyclotomicFraction::q_integer(n - 1) * *bn),
                                            -(CyclotomicFraction::q_integer(n - 2) * *bn1)};
        return CyclotomicFraction::sum(terms).to_rational_function();
    }
    return -(q_integer(n - 1) * table.at(n)) - q_integer(n - 2) * table.at(n - 1);
}

long denominator_degree_bound(long n) {
    require_nonnegative(n, "denominator_degree_bound");
    long degree = 0;
    for (long d = 2; d <= n + 1; ++d) {
        degree += euler_phi(d) * (n / (d - 1));
    }
    return degree;
}

std::vector<Rational> default_sample_points() {
    return {Rational(2), Rational(3, 2), Rational(-1, 3), Rational(5), Rational(7, 5)};
}

VerificationReport verify_theorem2_symbolic(long n_max, unsigned jobs) {
    require_nonnegative(n_max, "verify_theorem2");
    const QB2Table table = qb2_compute(n_max);
    nlohmann::ordered_json params = {{"n", {0, n_max}}, {"mode", "symbolic"}};
    return run_grid(
        "thm2", std::move(params), {"n"}, index_cells(n_max),
        [&](std::span<const long> c) {
            return compare_functions(qtheorem2_lhs(table, c[0]), qtheorem2_rhs(table, c[0]));
        },
        jobs);
}

VerificationReport verify_theorem2_sampled(long n_max, const std::vector<Rational>& points, unsigned jobs) {
    require_nonnegative(n_max, "verify_theorem2");
    if (points.empty()) {
        throw std::invalid_argument("verify_theorem2: sampled mode needs at least one sample point");
    }
    std::vector<Rational> used;
    std::vector<SpecialisedSides> sides;
    for (Rational v : points) {
        for (;;) {
            try {
                sides.push_back(specialised_sides(n_max, v));
                break;
            } catch (const ArithmeticError&) {
                v = Rational(v.numerator() + 1, v.denominator());
            }
        }
        used.push_back(v);
    }

    const std::set<Rational> distinct(used.begin(), used.end());
    const long bound = denominator_degree_bound(n_max);
    long proven_through = -1;
    for (long n = 0; n <= n_max && denominator_degree_bound(n) + 1 <= static_cast<long>(distinct.size()); ++n) {
        proven_through = n;
    }

    auto as_strings = [](const std::vector<Rational>& v) {
        std::vector<std::string> out;
        for (const auto& r : v) {
            out.push_back(r.str());
        }
        return out;
    };
    nlohmann::ordered_json params = {{"n", {0, n_max}},
                                     {"mode", "sampled"},
                                     {"sample_points", as_strings(points)},
                                     {"points_used", as_strings(used)},
                                     {"degree_bound", bound},
                                     {"points_needed_for_proof", bound + 1},
                                     {"proves_symbolic_through_n", proven_through}};

    std::vector<std::vector<long>> cells;
    for (long n = 0; n <= n_max; ++n) {
        for (long p = 0; p < static_cast<long>(used.size()); ++p) {
            cells.push_back({n, p});
        }
    }
    return run_grid(
        "thm2", std::move(params), {"n", "point"}, cells,
        [&](std::span<const long> c) {
            const auto& s = sides[static_cast<std::size_t>(c[1])];
            const auto n = static_cast<std::size_t>(c[0]);
            return compare_sides(s.lhs[n], s.rhs[n]);
        },
        jobs);
}

VerificationReport verify_theorem2(long n_max, SampleMode mode, const std::vector<Rational>& points, unsigned jobs) {
    return mode == SampleMode::symbolic ? verify_theorem2_symbolic(n_max, jobs)
                                        : verify_theorem2_sampled(n_max, points, jobs);
}

VerificationReport q_degeneration_check(const QB2Table& qtable, const B2Table& btable, long n_max, unsigned jobs) {
    require_nonnegative(n_max, "q_degeneration_check");
    if (!qtable.covers(n_max) || !btable.covers(n_max)) {
        throw std::out_of_range("q_degeneration_check: tables must cover n_max");
    }
    const Rational one(1);
    return run_grid(
        "qdegen", {{"n", {0, n_max}}}, {"n"}, index_cells(n_max),
        [&](std::span<const long> c) -> std::optional<Mismatch> {
            const RationalFunction& f = qtable.at(c[0]);
            if (f.denominator().eval(one).is_zero()) {
                return Mismatch{"pole at q=1: " + f.to_string(), btable.at(c[0]).str()};
            }
            return compare_sides(f.eval(one), btable.at(c[0]));
        },
        jobs);
}

VerificationReport verify_qdegen(long n_max, unsigned jobs) {
    require_nonnegative(n_max, "verify_qdegen");
    return q_degeneration_check(qb2_compute(n_max), b2_compute(n_max), n_max, jobs);
}

VerificationReport verify_b2r(long n_max, unsigned jobs) {
    require_nonnegative(n_max, "verify_b2r");
    const QB2Table table = qb2_compute(n_max);
    return run_grid(
        "b2r", {{"n", {0, n_max}}}, {"n"}, index_cells(n_max),
        [&](std::span<const long> c) {
            return compare_functions(b2r_residual(table, c[0]), RationalFunction(c[0] == 0 ? 1 : 0));
        },
        jobs);
}

VerificationReport verify_qint_split(long bound, unsigned jobs) {
    require_nonnegative(bound, "verify_qint_split");
    std::vector<std::vector<long>> cells;
    for (long n = -bound; n <= bound; ++n) {
        for (long a = -bound; a <= bound; ++a) {
            cells.push_back({n, a});
        }
    }
    return run_grid(
        "qint-split", {{"n", {-bound, bound}}, {"a", {-bound, bound}}}, {"n", "a"}, cells,
        [](std::span<const long> c) {
            const long n = c[0];
            const long a = c[1];
            return compare_functions(q_integer(n - a), q_integer(n) - RationalFunction::q_power(n - a) * q_integer(a));
        },
        jobs);
}

}  // namespace gregory
