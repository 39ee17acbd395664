// Copyright 2026 The mzv Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <gtest/gtest.h>

#include "mzv/values.hpp"

namespace mzv {
namespace {

Real pi2() { return const_pi() * const_pi(); }

SeriesSpec power_series(int power, int sign = 1) {
    SeriesSpec s;
    s.denominators.push_back({{1, 0}, power});
    s.sign = sign;
    return s;
}

TEST(SumSeries, ZetaTwo) {
    PrecisionGuard g(128);
    const SeriesResult r = sum_series(power_series(2));
    EXPECT_TRUE(r.converged);
    EXPECT_TRUE(r.value.contains(pi2() / Real(6L), 1e-30));
    EXPECT_LT(std::abs((r.value.value - pi2() / Real(6L)).to_double()), 1e-22);
}

TEST(SumSeries, AlternatingHarmonic) {
    PrecisionGuard g(128);
    const SeriesResult r = sum_series(power_series(1, -1));
    EXPECT_LT(std::abs((r.value.value + const_log2()).to_double()), 1e-12);
    EXPECT_TRUE(r.value.contains(-const_log2(), 1e-30));
}

TEST(SumSeries, ZeroCoefficientIsExactlyZero) {
    PrecisionGuard g(128);
    SeriesSpec s = power_series(2);
    s.coefficient = Real(0L);
    const SeriesResult r = sum_series(s);
    EXPECT_TRUE(r.value.value.is_zero());
    EXPECT_EQ(r.value.radius, 0.0);
}

TEST(SumSeries, DivergentSpecThrows) {
    EXPECT_FALSE(power_series(1).convergent());
    EXPECT_THROW(sum_series(power_series(1)), DomainError);
}

TEST(TailCorrect, ExtrapolatesInverseSquares) {
    PrecisionGuard g(128);
    std::vector<long> ns{1000, 2000, 4000, 8000, 16000, 32000};
    std::vector<Real> partial;
    Real s(0L);
    long m = 0;
    for (long n : ns) {
        while (m < n) {
            ++m;
            s += Real(1L) / (Real(m) * Real(m));
        }
        partial.push_back(s);
    }
    // Raw partial sum at 32000 is off by 3e-5; the fit removes 1/n, 1/n^2, 1/n^3.
    const ApproxReal v = tail_correct(ns, partial, 0, 3, 128);
    EXPECT_LT(std::abs((v.value - pi2() / Real(6L)).to_double()), 1e-12);
    EXPECT_TRUE(v.contains(pi2() / Real(6L), 0.0));
}

TEST(TailCorrect, ConstantPartialsAreExact) {
    PrecisionGuard g(128);
    std::vector<long> ns{10, 20, 40};
    std::vector<Real> partial(3, Real(5L));
    const ApproxReal v = tail_correct(ns, partial, 0, 3, 128);
    EXPECT_TRUE(v.value == Real(5L));
    EXPECT_EQ(v.radius, 0.0);
    EXPECT_THROW(tail_correct({1, 2}, {Real(1L), Real(1L)}, 0, 1, 128), std::invalid_argument);
}

TEST(SumSeries, ClassicalClosedFormsWithinRadius) {
    PrecisionGuard g(128);
    Context ctx;
    const Real p2 = pi2();
    struct Case {
        ApproxReal got;
        Real want;
    };
    const std::vector<Case> cases{
        {zeta(Composition{2}, ctx), p2 / Real(6L)},
        {zeta(Composition{3}, ctx), riemann_zeta(3)},
        {zeta(Composition{4}, ctx), p2 * p2 / Real(90L)},
        {-zeta(Composition({1}, {-1}), ctx), const_log2()},
        {T_value(Composition{2}, ctx), p2 / Real(4L)},
        {t_value(Composition{2}, ctx), p2 / Real(8L)},
    };
    for (const auto& c : cases) {
        EXPECT_TRUE(c.got.contains(c.want)) << c.got.value.str(30) << " vs " << c.want.str(30) << " radius " << c.got.radius;
        EXPECT_LT(c.got.radius, 1e-15);
    }
}

// Doubling the truncation never moves the value by more than the reported radius.
TEST(SumSeries, DoublingStaysWithinRadius) {
    PrecisionGuard g(128);
    std::mt19937 rng(2026);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t r = 1 + rng() % 3;
        std::vector<int> parts(r), signs(r);
        for (std::size_t i = 0; i < r; ++i) {
            parts[i] = 1 + static_cast<int>(rng() % 3);
            signs[i] = rng() % 4 == 0 ? -1 : 1;
        }
        if (parts.back() == 1 && signs.back() == 1) parts.back() = 2;
        const Composition k(parts, signs);
        SeriesSpec spec = chain_series(plain_chain(k, Link::Strict));
        ASSERT_TRUE(spec.convergent());
        SeriesOptions a;
        a.terms = 1L << 11;
        a.max_terms = 1L << 11;
        SeriesOptions b = a;
        b.terms = 1L << 12;
        b.max_terms = 1L << 12;
        const ApproxReal va = sum_series(spec, a).value, vb = sum_series(spec, b).value;
        EXPECT_LE(std::abs((va.value - vb.value).to_double()), va.radius + 1e-30) << k.str();
    }
}

TEST(ApproxRealArithmetic, RadiiPropagate) {
    PrecisionGuard g(128);
    const ApproxReal a(Real(2L), 1e-10), b(Real(3L), 2e-10);
    const ApproxReal s = a + b, d = a - b, p = a * b;
    EXPECT_GE(s.radius, a.radius + b.radius);
    EXPECT_LE(s.radius, a.radius + b.radius + 1e-30);
    EXPECT_GE(d.radius, a.radius + b.radius);
    EXPECT_GE(p.radius, 2 * b.radius + 3 * a.radius);
    EXPECT_LE(p.radius, 2 * b.radius + 3 * a.radius + a.radius * b.radius + 1e-30);
    EXPECT_TRUE(s.contains(Real(5L)));
    EXPECT_TRUE((a / b).contains(Real(2L) / Real(3L)));
    EXPECT_EQ(to_string(ApproxReal(Real(1L), 0.0), 5).substr(0, 1), "1");
}

TEST(ContextMemo, CachesBySpec) {
    Context ctx;
    zeta(Composition{2}, ctx);
    const std::size_t once = ctx.evaluations();
    zeta(Composition{2}, ctx);
    EXPECT_EQ(ctx.evaluations(), once);
    zeta(Composition{3}, ctx);
    EXPECT_EQ(ctx.evaluations(), once + 1);
}

}  // namespace
}  // namespace mzv
