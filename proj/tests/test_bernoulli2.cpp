#include <gtest/gtest.h>

#include "gregory/bernoulli2.hpp"
#include "oracles.hpp"

using namespace gregory;

namespace {

Polynomial x_minus(long r) { return Polynomial::linear_factor(r); }

const B2Table& table60() {
    static const B2Table t = b2_compute(60);
    return t;
}

}  // namespace

TEST(B2, SpotValues) {
    const B2Table t = b2_compute(5);
    const std::vector<Rational> expected = {1, Rational(1, 2), Rational(-1, 12), Rational(1, 24), Rational(-19, 720),
                                            Rational(3, 160)};
    EXPECT_EQ(t.values(), expected);
    EXPECT_EQ(b2_compute(0).values(), std::vector<Rational>{1});
    EXPECT_THROW(b2_compute(-1), std::invalid_argument);
}

TEST(B2, MatchesIntegralFormula) {
    const B2Table t = b2_compute(40);
    for (unsigned n = 0; n <= 40; ++n) {
        EXPECT_EQ(t.at(n), oracle::b2_integral(n)) << n;
    }
}

TEST(B2, MatchesSeriesInversion) { EXPECT_EQ(b2_compute(120), b2_by_series(120)); }

TEST(B2, AlternatingSigns) {
    const B2Table& t = table60();
    for (long n = 1; n <= 60; ++n) {
        EXPECT_EQ(t.at(n).sign(), n % 2 == 1 ? 1 : -1) << n;
    }
}

TEST(B2, Residual) {
    const B2Table t = b2_compute(30);
    EXPECT_EQ(b2e_residual(t, 0), Rational(1));
    for (long n = 1; n <= 30; ++n) {
        EXPECT_EQ(b2e_residual(t, n), Rational(0)) << n;
    }
    EXPECT_EQ(b2e_residual(t, 2), Rational(-1, 12) - Rational(1, 2) / 2 + Rational(1, 3));
}

TEST(B2, TableAccess) {
    const B2Table t = b2_compute(3);
    EXPECT_EQ(t.at(-1), Rational(0));
    EXPECT_THROW(t.at(4), std::out_of_range);
    EXPECT_TRUE(t.covers(3));
    EXPECT_FALSE(t.covers(4));
}

TEST(ATable, LowRows) {
    const ATable a = a_table_build(3);
    EXPECT_EQ(a.at(1, 0), Polynomial::constant(1));
    EXPECT_EQ(a.at(2, 0), -x_minus(1));
    EXPECT_EQ(a.at(2, 1), -x_minus(2));
    const Rational half(1, 2);
    EXPECT_EQ(a.at(3, 0), half * x_minus(1) * x_minus(2));
    EXPECT_EQ(a.at(3, 1), half * x_minus(2) * (Polynomial{-5, 2}));
    EXPECT_EQ(a.at(3, 2), half * x_minus(3) * x_minus(3));
    EXPECT_TRUE(a.at(3, 3).is_zero());
    EXPECT_TRUE(a.at(3, -1).is_zero());
    EXPECT_THROW(a.at(4, 0), std::out_of_range);
    EXPECT_THROW(a.at(0, 0), std::out_of_range);
}

TEST(ATable, RecursionHolds) {
    const ATable a = a_table_build(10);
    for (int N = 2; N <= 10; ++N) {
        for (int k = 0; k < N; ++k) {
            const Polynomial rhs = Rational(-1, N - 1) * (x_minus(N - 1) * a.at(N - 1, k) +
                                                          x_minus(N) * a.at(N - 1, k - 1).taylor_shift(-1));
            EXPECT_EQ(a.at(N, k), rhs) << N << "," << k;
            EXPECT_EQ(a.at(N, k).degree(), N - 1);
        }
    }
}

TEST(ATable, RejectsMalformedRows) {
    EXPECT_THROW(ATable({{Polynomial::constant(1)}, {Polynomial::constant(1)}}), std::invalid_argument);
    EXPECT_THROW(a_table_build(0), std::invalid_argument);
}

TEST(Convolution, MatchesCompositionSums) {
    const B2Table& t = table60();
    for (int N = 1; N <= 4; ++N) {
        for (long n = 0; n <= 10; ++n) {
            EXPECT_EQ(s_convolve(t, N, n), oracle::s_by_compositions(t.values(), N, n)) << N << "," << n;
        }
    }
    EXPECT_EQ(s_convolve(t, 3, -1), Rational(0));
    EXPECT_THROW(s_convolve(t, 2, 61), std::out_of_range);
}

TEST(Convolution, PowersTable) {
    const B2Table& t = table60();
    const ConvolutionPowers powers(t, 5, 30);
    for (int N = 1; N <= 5; ++N) {
        for (long n = 0; n <= 30; ++n) {
            EXPECT_EQ(powers.at(N, n), s_convolve(t, N, n));
        }
    }
}

TEST(ClosedForm, ClosedFormSmall) {
    const B2Table& t = table60();
    const ATable a = a_table_build(6);
    for (int N = 1; N <= 6; ++N) {
        for (long n = 1; n <= 20; ++n) {
            EXPECT_EQ(s_closed_form(a, t, N, n), oracle::s_by_compositions(t.values(), N, n)) << N << "," << n;
        }
    }
    // s_2(2) = 2 b_2 + b_1^2 and the closed form gives -b_2
    EXPECT_EQ(s_closed_form(a, t, 2, 2), Rational(1, 12));
}

TEST(ClosedForm, Report) {
    const auto r = verify_theorem1({1, 4}, {1, 20}, 2);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.instances_checked, 80u);
    EXPECT_EQ(r.identity, "thm1");
}

TEST(ClosedForm, PerturbedTableFails) {
    std::vector<Rational> values = table60().values();
    values[7] += Rational(1, 1000);
    const auto r = verify_theorem1(B2Table(values), {1, 3}, {1, 12}, 3);
    ASSERT_FALSE(r.passed());
    // N = 1 is an identity of the table with itself, so the first failure
    // sits at N = 2, where n = 7 is the first convolution touching b_7
    EXPECT_EQ(r.first_failure->params, (std::vector<long>{2, 7}));
}

TEST(ClosedForm, FirstFailureIsIndependentOfJobs) {
    std::vector<Rational> values = table60().values();
    values[9] = -values[9];
    const B2Table bad(values);
    const auto one = verify_theorem1(bad, {1, 5}, {1, 20}, 1);
    const auto many = verify_theorem1(bad, {1, 5}, {1, 20}, 4);
    ASSERT_FALSE(one.passed());
    EXPECT_EQ(one.first_failure->params, many.first_failure->params);
    EXPECT_EQ(one.first_failure->lhs, many.first_failure->lhs);
}

TEST(ClosedForm, Preconditions) {
    EXPECT_THROW(verify_theorem1(b2_compute(5), {1, 2}, {1, 10}), std::out_of_range);
    EXPECT_THROW(verify_theorem1({1, 0}, {1, 5}), std::invalid_argument);
}

TEST(B2Reports, Suites) {
    EXPECT_TRUE(verify_b2e(50).passed());
    const auto s = verify_s2s3();
    EXPECT_TRUE(s.passed());
    EXPECT_EQ(s.instances_checked, 5u);
    const auto b = verify_boundary_lines(10);
    EXPECT_TRUE(b.passed());
    EXPECT_EQ(b.instances_checked, 19u);
}

TEST(ClosedForm, SmallCasesAndZeroColumn) {
    const B2Table& t = table60();
    const ATable a = a_table_build(8);
    EXPECT_EQ(t.at(-3), Rational(0));
    EXPECT_EQ(s_convolve(t, 2, 2), Rational(1, 12));
    EXPECT_EQ(s_closed_form(a, t, 2, 1), Rational(1));
    EXPECT_EQ(s_convolve(t, 3, 3), s_closed_form(a, t, 3, 3));
    for (long n = 0; n <= 10; ++n) {
        EXPECT_EQ(s_convolve(t, 1, n), t.at(n));
    }
    // both sides are also 1 at n = 0
    for (int N = 1; N <= 8; ++N) {
        EXPECT_EQ(a.at(N, 0).eval(0), Rational(1)) << N;
        EXPECT_EQ(s_convolve(t, N, 0), Rational(1)) << N;
        EXPECT_EQ(s_closed_form(a, t, N, 0), Rational(1)) << N;
    }
    EXPECT_TRUE(verify_theorem1({1, 8}, {0, 0}).passed());
}
