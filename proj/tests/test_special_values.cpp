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

#include <gtest/gtest.h>

#include "mzv/values.hpp"

namespace mzv {
namespace {

class SpecialValues : public ::testing::Test {
protected:
    PrecisionGuard guard{128};
    Context ctx;

    static double gap(const ApproxReal& a, const Real& b) { return std::abs((a.value - b).to_double()); }
    static double gap(const ApproxReal& a, const ApproxReal& b) { return std::abs((a.value - b.value).to_double()); }
    static Real pi2() { return const_pi() * const_pi(); }
};

TEST_F(SpecialValues, EulerAndAlternatingValues) {
    EXPECT_LT(gap(zeta(Composition{1, 2}, ctx), riemann_zeta(3)), 1e-15);
    EXPECT_LT(gap(zeta(Composition({2}, {-1}), ctx), -pi2() / Real(12L)), 1e-15);
    EXPECT_LT(gap(zeta_star(Composition{2, 2}, ctx), zeta(Composition{2, 2}, ctx) + zeta(Composition{4}, ctx)), 1e-15);
    EXPECT_THROW(zeta(Composition{1}, ctx), DomainError);
    EXPECT_THROW(zeta(Composition{2, 1}, ctx), DomainError);
    EXPECT_TRUE(zeta(Composition{}, ctx).value == Real(1L));
}

TEST_F(SpecialValues, StuffleProducts) {
    for (int a = 2; a <= 4; ++a)
        for (int b = 2; b <= 4; ++b) {
            const ApproxReal lhs = zeta(Composition{a}, ctx) * zeta(Composition{b}, ctx);
            const ApproxReal rhs = zeta(Composition{a, b}, ctx) + zeta(Composition{b, a}, ctx) + zeta(Composition{a + b}, ctx);
            EXPECT_LT(gap(lhs, rhs), 1e-6) << a << "," << b;
        }
}

TEST_F(SpecialValues, DualitySanity) {
    EXPECT_LT(gap(zeta(Composition{1, 2}, ctx), zeta(Composition{3}, ctx)), 1e-6);
    EXPECT_LT(gap(zeta(Composition{1, 1, 2}, ctx), zeta(Composition{4}, ctx)), 1e-6);
    // (1, 3) is self-dual; its value is zeta(4) / 4.
    EXPECT_LT(gap(zeta(Composition{1, 3}, ctx), zeta(Composition{4}, ctx) * Rational(1, 4)), 1e-6);
}

TEST_F(SpecialValues, LevelTwoDepthOne) {
    EXPECT_LT(gap(t_value(Composition{2}, ctx), pi2() / Real(8L)), 1e-15);
    EXPECT_LT(gap(T_value(Composition{2}, ctx), pi2() / Real(4L)), 1e-15);
    EXPECT_LT(gap(T_value(Composition{2}, ctx), ApproxReal(2L) * t_value(Composition{2}, ctx)), 1e-15);
    EXPECT_LT(gap(S_value(Composition{2}, ctx), ApproxReal(2L) * (zeta(Composition{2}, ctx) * Rational(1, 4))), 1e-15);
    EXPECT_LT(gap(T_value_reg(Composition{1}, ctx), Real(2L) * const_log2()), 1e-30);
}

// M(1, 2, 3 odd) = 8 sum_{l<m<n} 1/((2l)(2m)^2(2n-1)^3) = sum_n zeta_{n-1}(1,2)/(2n-1)^3.
TEST_F(SpecialValues, MixedValueAgainstReindexedSeries) {
    const ApproxReal m = M_value(Composition{1, 2, 3}, {1, 1, -1}, ctx);
    SeriesSpec s;
    s.denominators.push_back({{2, -1}, 3});
    s.inner.push_back({plain_chain(Composition{1, 2}, Link::Strict), {1, -1}});
    const ApproxReal oracle = ctx.eval(s);
    EXPECT_LT(gap(m, oracle), 1e-8);
}

TEST_F(SpecialValues, SingleVariablePolylog) {
    const Real half = from_rational(1, 2);
    EXPECT_LT(gap(li_single(Composition{1}, half, ctx), const_log2()), 1e-30);
    EXPECT_LT(gap(li_single(Composition{2}, Real(1L), ctx), pi2() / Real(6L)), 1e-15);
    // Direct summation: sum_n 2^{-n} H_{n-1} / n^2.
    Real direct(0L), h(0L), p(1L);
    for (long n = 1; n <= 400; ++n) {
        p /= 2L;
        direct += p * h / (Real(n) * Real(n));
        h += Real(1L) / Real(n);
    }
    EXPECT_LT(gap(li_single(Composition{1, 2}, half, ctx), direct), 1e-10);
}

TEST_F(SpecialValues, LambdaFunction) {
    EXPECT_LT(gap(lambda_at_one(Composition{2}, {-1}, ctx), li_signs(Composition{2}, {-1}, false, ctx)), 1e-30);
    EXPECT_LT(gap(lambda_at_one(Composition{1, 2}, {1, 1}, ctx), riemann_zeta(3)), 1e-15);
    EXPECT_THROW(lambda_at_one(Composition{1}, {1}, ctx), DomainError);
    // Truncated double sum of (-1)^{n_1} / (n_1 n_2^2); the truncation error is below 1e-4.
    Real inner(0L), outer(0L);
    for (long n = 1; n <= 20000; ++n) {
        outer += inner / (Real(n) * Real(n));
        inner += Real(n % 2 ? -1L : 1L) / Real(n);
    }
    EXPECT_LT(gap(lambda_at_one(Composition{1, 2}, {-1, 1}, ctx), outer), 1e-4);
}

TEST_F(SpecialValues, KanekoTsumuraFunction) {
    const Real half = from_rational(1, 2);
    const Real l3 = log(Real(3L));
    EXPECT_LT(gap(A_function(Composition{1}, half, ctx), l3), 1e-30);
    EXPECT_LT(gap(A_function(Composition{1, 1}, half, ctx), l3 * l3 / Real(2L)), 1e-30);
    EXPECT_LT(gap(A_function(Composition{2}, Real(1L), ctx), pi2() / Real(4L)), 1e-15);
    for (const Composition& k : {Composition{2}, Composition{1, 2}, Composition{2, 3}, Composition{1, 1, 2}})
        EXPECT_LT(gap(A_function(k, Real(1L), ctx), T_value(k, ctx)), 1e-6) << k.str();
}

TEST_F(SpecialValues, LAndTFunctions) {
    const Real half = from_rational(1, 2);
    EXPECT_LT(gap(L_function(Composition{1}, half, ctx), -log(from_rational(3, 4)) / Real(2L)), 1e-30);
    EXPECT_LT(gap(t_function(Composition{2}, Real(1L), ctx), pi2() / Real(8L)), 1e-15);
    EXPECT_LT(gap(t_function(Composition{}, half, ctx), Real(2L)), 1e-30);
    for (const Composition& k : {Composition{2}, Composition{1, 2}, Composition{2, 2}}) {
        ApproxReal scaled = zeta(k, ctx) * Rational(1, Integer(1) << k.weight());
        EXPECT_LT(gap(L_function(k, Real(1L), ctx), scaled), 1e-6) << k.str();
        EXPECT_LT(gap(t_function(k, Real(1L), ctx), t_value(k, ctx)), 1e-6) << k.str();
    }
}

TEST_F(SpecialValues, BarZeta) {
    EXPECT_TRUE(bar_zeta(0).value == from_rational(1, 2));
    EXPECT_LT(gap(bar_zeta(1), const_log2()), 1e-35);
    EXPECT_LT(gap(bar_zeta(2), pi2() / Real(12L)), 1e-35);
    EXPECT_LT(gap(bar_zeta(3), -zeta(Composition({3}, {-1}), ctx)), 1e-15);
    EXPECT_THROW(bar_zeta(-1), DomainError);
}

}  // namespace
}  // namespace mzv
