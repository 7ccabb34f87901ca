#include <gtest/gtest.h>

#include <random>

#include "llc/qexact.hpp"

using namespace llc;

namespace {

ExactScalar sc(long long num, long long den, long long k, long long im_num = 0) {
    return {GaussRat(make_rational(num, den), make_rational(im_num, den)), k};
}

LocalFieldContext ctx_q(long long p, long long f = 1) { return LocalFieldContext::create(p, f); }

// Squaring oracle: x = a q^(k/2) with a > 0, so x < y iff x^2 < y^2, and
// x^2 = a^2 q^k is an ordinary rational.
std::strong_ordering oracle_compare(const PosQMonomial& x, const PosQMonomial& y, long long q) {
    const Rational lx = x.a * x.a * ipow_rational(q, x.k);
    const Rational ly = y.a * y.a * ipow_rational(q, y.k);
    if (lx < ly) return std::strong_ordering::less;
    if (lx > ly) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace

TEST(ScalarArith, Examples) {
    EXPECT_EQ(scalar_arith(sc(1, 1, 2), sc(1, 1, -2), ScalarOp::mul), sc(1, 1, 0));
    EXPECT_EQ(scalar_arith(sc(0, 1, 0, 1), ExactScalar(), ScalarOp::pow, 2), sc(-1, 1, 0));
    EXPECT_EQ(scalar_arith(sc(1, 2, 1), sc(1, 2, 1), ScalarOp::div), sc(1, 1, 0));
}

TEST(ScalarArith, DivisionByZeroThrows) {
    EXPECT_THROW(scalar_arith(sc(1, 1, 0), sc(0, 1, 0), ScalarOp::div), Error);
}

TEST(EqualsOne, Examples) {
    EXPECT_TRUE(equals_one(sc(1, 3, 2), ctx_q(3)));
    EXPECT_FALSE(equals_one(sc(1, 1, 1), ctx_q(3)));
    EXPECT_FALSE(equals_one(sc(0, 1, 0, 1), ctx_q(5)));
    // q = 4: 2 * q^(-1/2) = 1
    EXPECT_TRUE(equals_one(sc(2, 1, -1), ctx_q(2, 2)));
    EXPECT_FALSE(equals_one(sc(-1, 3, 2), ctx_q(3)));
}

TEST(NormSqCompare, Examples) {
    EXPECT_EQ(norm_sq_compare({1, 0}, {1, 0}, ctx_q(3)), std::strong_ordering::equal);
    EXPECT_EQ(norm_sq_compare({1, 2}, {2, 0}, ctx_q(3)), std::strong_ordering::greater);
    EXPECT_EQ(norm_sq_compare({3, 0}, {1, 1}, ctx_q(3, 2)), std::strong_ordering::equal);
}

TEST(NormSqCompare, AgreesWithSquaringOracleAndIsATotalOrder) {
    std::mt19937_64 gen(11);
    std::uniform_int_distribution<int> num(1, 30), kd(-5, 5);
    const long long qs[] = {2, 3, 4, 5, 9};
    for (long long q : qs) {
        const LocalFieldContext ctx = q == 4 ? ctx_q(2, 2) : q == 9 ? ctx_q(3, 2) : ctx_q(q);
        std::vector<PosQMonomial> xs;
        for (int i = 0; i < 40; ++i) xs.emplace_back(make_rational(num(gen), num(gen)), kd(gen));
        for (const auto& x : xs)
            for (const auto& y : xs) {
                const auto c = norm_sq_compare(x, y, ctx);
                ASSERT_EQ(c, oracle_compare(x, y, q));
                ASSERT_EQ(norm_sq_compare(y, x, ctx), 0 <=> c);
            }
        for (const auto& x : xs)
            for (const auto& y : xs)
                for (const auto& z : xs)
                    if (norm_sq_compare(x, y, ctx) <= 0 && norm_sq_compare(y, z, ctx) <= 0) {
                        ASSERT_TRUE(norm_sq_compare(x, z, ctx) <= 0);
                    }
    }
}

TEST(ScalarArith, GroupLawsOnRandomScalars) {
    std::mt19937_64 gen(5);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7), kd(-6, 6);
    const LocalFieldContext ctx = ctx_q(3);
    auto rnd = [&] {
        for (;;) {
            ExactScalar x{GaussRat(make_rational(num(gen), den(gen)), make_rational(num(gen), den(gen))), kd(gen)};
            if (!x.is_zero()) return x;
        }
    };
    for (int i = 0; i < 300; ++i) {
        const ExactScalar x = rnd(), y = rnd(), z = rnd();
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * ExactScalar::one(), x);
        EXPECT_TRUE(equals_one(x * x.inverse(), ctx));
        EXPECT_TRUE(equals_one(x.inverse() * x, ctx));
        EXPECT_TRUE(!(equals_one(x * y, ctx) && equals_one(x, ctx)) || equals_one(y, ctx));
        EXPECT_TRUE(same_value(x, canonical(x, ctx), ctx));
    }
}

TEST(Canonical, EqualValuesHaveEqualForms) {
    const LocalFieldContext ctx3 = ctx_q(3);
    // 3 * q^-1 = 1 and q^2 / 9 = 1 for q = 3
    EXPECT_EQ(canonical(sc(3, 1, -2), ctx3), canonical(ExactScalar::one(), ctx3));
    EXPECT_EQ(canonical(sc(1, 9, 4), ctx3), canonical(ExactScalar::one(), ctx3));
    const LocalFieldContext ctx4 = ctx_q(2, 2);
    // q = 4: 2 = q^(1/2), 8 = q^(3/2), 1/2 * q = 2
    EXPECT_EQ(canonical(sc(2, 1, 0), ctx4), canonical(sc(1, 1, 1), ctx4));
    EXPECT_EQ(canonical(sc(8, 1, 0), ctx4), canonical(sc(1, 1, 3), ctx4));
    EXPECT_EQ(canonical(sc(1, 2, 2), ctx4), canonical(sc(2, 1, 0), ctx4));
    // a value that differs
    EXPECT_NE(canonical(sc(2, 1, 0), ctx3), canonical(sc(1, 1, 1), ctx3));
}

TEST(LFactor, MulExamples) {
    const LocalFieldContext ctx = ctx_q(3);
    EXPECT_TRUE(lfactor_mul(LFactor(), LFactor()).is_one());
    const LFactor one = LFactor::single(ExactScalar::one());
    EXPECT_EQ(lfactor_mul(one, one).size(), 2u);
    const LFactor sp2 = LFactor::single(ExactScalar::q_power(-1));
    const LFactor sp3 = LFactor::single(ExactScalar::q_power(-2));
    const LFactor expected({{ExactScalar::q_power(-2), 1}, {ExactScalar::q_power(-1), 1}});
    EXPECT_TRUE(lfactor_mul(sp2, sp3).equals(expected, ctx));
    EXPECT_EQ(sp3.render(ctx), "(1 - q^-2 T)^-1");
    EXPECT_EQ(LFactor().render(ctx), "1");
}

TEST(LFactor, PoleExamples) {
    const LocalFieldContext ctx = ctx_q(5);
    const LFactor one = LFactor::single(ExactScalar::one());
    EXPECT_TRUE(lfactor_pole_at(one, HalfInt(0), ctx).has_pole);
    EXPECT_EQ(lfactor_pole_at(one, HalfInt(0), ctx).order, 1);
    EXPECT_FALSE(lfactor_pole_at(one, HalfInt(1), ctx).has_pole);
    const LFactor q = LFactor::single(ExactScalar::q_power(1));
    EXPECT_TRUE(lfactor_pole_at(q, HalfInt(1), ctx).has_pole);
}

TEST(LFactor, PoleOrderIsAdditive) {
    std::mt19937_64 gen(7);
    std::uniform_int_distribution<int> kd(-4, 4), sgn(0, 3), tt(1, 3);
    const LocalFieldContext ctx = ctx_q(2);
    const GaussRat units[] = {GaussRat(1), GaussRat(-1), GaussRat(0, 1), GaussRat(0, -1)};
    auto rnd = [&] {
        std::vector<LFactorTerm> terms;
        for (int i = 0, n = sgn(gen); i < n; ++i) terms.push_back({{units[sgn(gen)], kd(gen)}, tt(gen)});
        return LFactor(terms);
    };
    for (int i = 0; i < 200; ++i) {
        const LFactor a = rnd(), b = rnd();
        for (int h = -4; h <= 4; ++h) {
            const HalfInt s0 = HalfInt::from_halves(h);
            EXPECT_EQ(lfactor_pole_at(a * b, s0, ctx).order,
                      lfactor_pole_at(a, s0, ctx).order + lfactor_pole_at(b, s0, ctx).order);
        }
    }
}

TEST(LFactor, ShiftMovesPoles) {
    const LocalFieldContext ctx = ctx_q(3);
    const LFactor l = LFactor::single(ExactScalar::one());
    // L(s + 1) has its pole at s = -1
    EXPECT_TRUE(lfactor_pole_at(l.shifted(HalfInt(1)), HalfInt(-1), ctx).has_pole);
    EXPECT_FALSE(lfactor_pole_at(l.shifted(HalfInt(1)), HalfInt(0), ctx).has_pole);
}

TEST(Context, Validation) {
    EXPECT_THROW(LocalFieldContext::create(4, 1), Error);
    EXPECT_THROW(LocalFieldContext::create(3, 0), Error);
    EXPECT_THROW(LocalFieldContext::create(3, 1, -1), Error);
    EXPECT_EQ(LocalFieldContext::create(3, 2).q(), 9);
}

TEST(Render, Shapes) {
    EXPECT_EQ(render(ExactScalar::q_power(-2)), "q^-2");
    EXPECT_EQ(render(ExactScalar::q_power(HalfInt::from_halves(-3))), "q^(-3/2)");
    EXPECT_EQ(render(sc(-1, 1, 0)), "-1");
    EXPECT_EQ(render(sc(-1, 1, 2)), "-q");
}

TEST(QuadScalar, MonomialRoundTrip) {
    const long long q = 3;
    const ExactScalar x = sc(2, 5, 3);
    const QuadScalar v = QuadScalar::from(x, q);
    const auto back = v.as_monomial();
    ASSERT_TRUE(back.has_value());
    EXPECT_TRUE(same_value(*back, x, ctx_q(3)));
    EXPECT_TRUE((v * v.inverse()) == QuadScalar::constant(GaussRat(1), q));
}
