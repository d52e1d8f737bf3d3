#include <gtest/gtest.h>

#include <random>

#include "gregory/polynomial.hpp"
#include "gregory/rational_function.hpp"
#include "oracles.hpp"

using namespace gregory;

namespace {

Polynomial q_poly(std::initializer_list<Rational> c) { return Polynomial(c); }

// 1 + q, 1 + q + q^2
const Polynomial kOnePlusQ{1, 1};
const Polynomial kThree{1, 1, 1};

struct RandomValues {
    std::mt19937 rng{20240613};

    Rational rational() {
        std::uniform_int_distribution<long> num(-30, 30);
        std::uniform_int_distribution<long> den(1, 12);
        return Rational(num(rng), den(rng));
    }

    Polynomial polynomial(int max_degree = 4) {
        std::uniform_int_distribution<int> deg(0, max_degree);
        std::vector<Rational> c;
        for (int i = deg(rng); i >= 0; --i) {
            c.push_back(rational());
        }
        return Polynomial(c);
    }

    RationalFunction function() {
        Polynomial den;
        while (den.is_zero()) {
            den = polynomial(3);
        }
        return RationalFunction(polynomial(3), den);
    }
};

}  // namespace

TEST(Rational, Arithmetic) {
    EXPECT_EQ(Rational(1, 2) + Rational(-1, 3), Rational(1, 6));
    EXPECT_EQ((Rational(-19, 720) * Rational(0)).str(), "0/1");
    EXPECT_EQ(Rational(1, 4) - Rational(1, 3), Rational(-1, 12));
    EXPECT_EQ(Rational(6, -4).str(), "-3/2");
    EXPECT_EQ(Rational(5).str(), "5/1");
}

TEST(Rational, DivisionByZeroThrows) {
    EXPECT_THROW(Rational(3) / Rational(0), ArithmeticError);
    EXPECT_THROW(Rational(0).inverse(), ArithmeticError);
    EXPECT_THROW(Rational(1, 0), ArithmeticError);
}

TEST(Rational, Parse) {
    EXPECT_EQ(Rational::parse("-19/720"), Rational(-19, 720));
    EXPECT_EQ(Rational::parse("4/-6"), Rational(-2, 3));
    EXPECT_EQ(Rational::parse("7"), Rational(7));
    EXPECT_THROW(Rational::parse("1/0"), ArithmeticError);
    EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Rational, FieldAxioms) {
    RandomValues r;
    for (int i = 0; i < 300; ++i) {
        const Rational a = r.rational(), b = r.rational(), c = r.rational();
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a - a, Rational(0));
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), Rational(1));
            EXPECT_EQ(b / a * a, b);
        }
        EXPECT_EQ(gcd(abs(a.numerator()), a.denominator()), 1);
        EXPECT_GE(a.denominator(), 1);
    }
}

TEST(Polynomial, Arithmetic) {
    EXPECT_EQ(Polynomial::linear_factor(1) * Polynomial::linear_factor(2), (Polynomial{2, -3, 1}));
    const Polynomial p{1, Rational(1, 2), 3};
    EXPECT_EQ(p + Polynomial(), p);
    EXPECT_EQ(kOnePlusQ * kThree, (Polynomial{1, 2, 2, 1}));
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ((p - p).degree(), Polynomial::kZeroDegree);
    EXPECT_EQ((Polynomial{1, 2, 0, 0}).degree(), 1);
}

TEST(Polynomial, TaylorShift) {
    EXPECT_EQ((Polynomial{0, 0, 1}).taylor_shift(-1), (Polynomial{1, -2, 1}));
    // -(x-2) shifted by -1 is -(x-3)
    const Polynomial p = -Polynomial::linear_factor(2);
    EXPECT_EQ(p.taylor_shift(-1), -Polynomial::linear_factor(3));
    EXPECT_EQ(p.taylor_shift(-1), oracle::shift_binomial(p, -1));
    EXPECT_EQ(Polynomial::constant(Rational(7, 3)).taylor_shift(Rational(-5, 2)), Polynomial::constant(Rational(7, 3)));
}

TEST(Polynomial, Eval) {
    EXPECT_EQ((-Polynomial::linear_factor(1)).eval(2), Rational(-1));
    const Polynomial sq = Rational(1, 2) * Polynomial::linear_factor(3) * Polynomial::linear_factor(3);
    EXPECT_EQ(sq.eval(3), Rational(0));
    EXPECT_EQ(Polynomial().eval(Rational(5, 7)), Rational(0));
}

TEST(Polynomial, Gcd) {
    EXPECT_EQ(gcd(Polynomial{-1, 0, 1}, Polynomial::linear_factor(1)), Polynomial::linear_factor(1));
    const Polynomial p{3, 0, 2};
    EXPECT_EQ(gcd(p, Polynomial::constant(1)), Polynomial::constant(1));
    const Polynomial big = kOnePlusQ * kOnePlusQ * kThree;
    const Polynomial g = gcd(big, kOnePlusQ);
    EXPECT_EQ(g, kOnePlusQ);
    EXPECT_TRUE(divmod(big, g).remainder.is_zero());
    EXPECT_TRUE(g.leading().is_one());
    EXPECT_THROW(gcd(Polynomial(), Polynomial()), ArithmeticError);
    EXPECT_EQ(gcd(Polynomial(), Polynomial{2, 4}), (Polynomial{Rational(1, 2), 1}));
}

TEST(Polynomial, DivisionErrors) {
    EXPECT_THROW(divmod(Polynomial{1, 1}, Polynomial()), ArithmeticError);
    EXPECT_THROW(exact_quotient(Polynomial{1, 0, 1}, Polynomial{1, 1}), ArithmeticError);
    EXPECT_THROW(Polynomial().leading(), std::exception);
}

TEST(Polynomial, ShiftProperties) {
    RandomValues r;
    for (int i = 0; i < 100; ++i) {
        const Polynomial p = r.polynomial(6);
        const Rational a = r.rational(), v = r.rational();
        EXPECT_EQ(p.taylor_shift(a).taylor_shift(-a), p);
        EXPECT_EQ(p.taylor_shift(a).eval(v), p.eval(v + a));
        EXPECT_EQ(p.taylor_shift(a), oracle::shift_binomial(p, a));
        EXPECT_EQ(p.taylor_shift(a).degree(), p.degree());
    }
}

TEST(RationalFunction, Arithmetic) {
    const RationalFunction inv(Polynomial::constant(1), kOnePlusQ);
    const RationalFunction two = inv + inv;
    EXPECT_EQ(two.numerator(), Polynomial::constant(2));
    EXPECT_EQ(two.denominator(), kOnePlusQ);

    const Polynomial den = kOnePlusQ * kOnePlusQ * kThree;
    const RationalFunction f(q_poly({0, -1}), den);
    EXPECT_EQ(f * f.inverse(), RationalFunction(1));

    // 1/(1+q)^2 - 1/(1+q+q^2), reduced by cross-multiplication
    const RationalFunction diff =
        RationalFunction(Polynomial::constant(1), kOnePlusQ * kOnePlusQ) - RationalFunction(Polynomial::constant(1), kThree);
    const Polynomial cross_num = kThree - kOnePlusQ * kOnePlusQ;
    EXPECT_EQ(cross_num, q_poly({0, -1}));
    EXPECT_EQ(diff.numerator(), q_poly({0, -1}));
    EXPECT_EQ(diff.denominator(), den);
    EXPECT_EQ(diff, f);
}

TEST(RationalFunction, CanonicalForm) {
    const RationalFunction f(Polynomial{2, 2}, Polynomial{4, 8, 4});
    EXPECT_EQ(f.numerator(), Polynomial::constant(Rational(1, 2)));
    EXPECT_EQ(f.denominator(), kOnePlusQ);
    EXPECT_THROW(RationalFunction(Polynomial{1}, Polynomial()), ArithmeticError);
    EXPECT_THROW(RationalFunction(1) / RationalFunction(0), ArithmeticError);
    EXPECT_EQ(RationalFunction(0).denominator(), Polynomial::constant(1));
    EXPECT_EQ(RationalFunction::q_power(-2) * RationalFunction::q_power(3), RationalFunction(Polynomial{0, 1}));
}

TEST(RationalFunction, Eval) {
    // [3]_q at q = 1
    EXPECT_EQ(RationalFunction(kThree).eval(1), Rational(3));
    const RationalFunction b2(q_poly({0, -1}), kOnePlusQ * kOnePlusQ * kThree);
    EXPECT_EQ(b2.eval(1), Rational(-1, 12));
    const RationalFunction inv(Polynomial::constant(1), kOnePlusQ);
    EXPECT_THROW(inv.eval(-1), PoleError);
}

TEST(RationalFunction, RoutesAgree) {
    RandomValues r;
    for (int i = 0; i < 60; ++i) {
        const RationalFunction f = r.function(), g = r.function(), h = r.function();
        EXPECT_EQ((f + g) * h, f * h + g * h);
        EXPECT_EQ((f + g) + h, f + (g + h));
        EXPECT_EQ(f - g + g, f);
        if (!g.is_zero()) {
            EXPECT_EQ(f / g * g, f);
        }
        // canonical pair does not depend on how num and den were scaled
        const Polynomial s = r.polynomial(2);
        if (!s.is_zero()) {
            EXPECT_EQ(RationalFunction(f.numerator() * s, f.denominator() * s), f);
        }
    }
}

TEST(RationalFunction, EvalCommutesWithArithmetic) {
    RandomValues r;
    int checked = 0;
    for (int i = 0; i < 100; ++i) {
        const RationalFunction f = r.function(), g = r.function();
        const Rational v = r.rational();
        try {
            const Rational fv = f.eval(v), gv = g.eval(v);
            EXPECT_EQ((f + g).eval(v), fv + gv);
            EXPECT_EQ((f * g).eval(v), fv * gv);
            EXPECT_EQ((f - g).eval(v), fv - gv);
            ++checked;
        } catch (const PoleError&) {
        }
    }
    EXPECT_GT(checked, 50);
}
