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

#include "mzv/convolution.hpp"
#include "mzv/harmonic.hpp"
#include "mzv/schur.hpp"
#include "support/oracles.hpp"

namespace mzv {
namespace {

using namespace oracle;

class Convolution : public ::testing::Test {
protected:
    PrecisionGuard guard{128};
    Context ctx;
    static double gap(const ApproxReal& a, const ApproxReal& b) { return std::abs((a.value - b.value).to_double()); }
};

TEST_F(Convolution, KanekoYamamotoReductions) {
    // l = (1): the star factor is empty, leaving zeta(1, 3).
    EXPECT_LT(gap(ky_zeta(Composition{1, 2}, Composition{1}, ctx), zeta(Composition{1, 3}, ctx)), 1e-15);
    EXPECT_LT(gap(ky_zeta(Composition{2}, Composition{2}, ctx), zeta(Composition{4}, ctx)), 1e-15);
    // xi(2; 1) through the Arakawa-Kaneko route and the convolution route.
    EXPECT_LT(gap(xi_value(Composition{2}, 1, ctx), zeta(Composition{3}, ctx)), 1e-15);
    EXPECT_LT(gap(xi_value(Composition{2}, 2, ctx), ky_zeta(Composition{2}, Composition{1, 1}, ctx)), 1e-30);
}

// sum H_{n-1} H_n / n^4 = 2 zeta(1,1,4) + zeta(2,4) + zeta(1,5).
TEST_F(Convolution, KanekoYamamotoAgainstHarmonicExpansion) {
    const ApproxReal lhs = ky_zeta(Composition{1, 2}, Composition{1, 2}, ctx);
    const ApproxReal rhs = ApproxReal(2L) * zeta(Composition{1, 1, 4}, ctx) + zeta(Composition{2, 4}, ctx) +
                           zeta(Composition{1, 5}, ctx);
    EXPECT_LT(gap(lhs, rhs), 1e-10);
}

TEST_F(Convolution, PartialSumAgainstDirectLoop) {
    const Composition k{1, 2}, l{2, 2};
    Rational direct = 0;
    for (long n = 1; n <= 30; ++n) direct += mhs(k.init(), n - 1) * mhss(l.init(), n) * inverse_power(n, 4);
    EXPECT_EQ(ky_partial(k, l, 30), direct);
}

TEST_F(Convolution, ConvolutedPartialsAgainstHarmonicSums) {
    Rational t_direct = 0, s_direct = 0;
    for (long n = 1; n <= 30; ++n) {
        const Rational tn = mths_T(Composition{1}, n), sn = mshs_S(Composition{1}, n);
        t_direct += 2 * tn * tn * inverse_power(2 * n, 4);
        s_direct += 2 * sn * sn * inverse_power(2 * n - 1, 4);
    }
    EXPECT_EQ(conv_partial(Composition{1, 2}, Composition{1, 2}, ConvCase::EvenEven, false, 30), t_direct);
    EXPECT_EQ(conv_partial(Composition{1, 2}, Composition{1, 2}, ConvCase::EvenEven, true, 30), s_direct);
}

TEST_F(Convolution, AlternatingReducesToPlain) {
    EXPECT_LT(gap(alt_ky(Composition{1, 2}, Composition{1, 2}, ctx), ky_zeta(Composition{1, 2}, Composition{1, 2}, ctx)),
              1e-20);
    EXPECT_THROW(ky_zeta(Composition{}, Composition{2}, ctx), std::exception);
}

TEST_F(Convolution, CaseSelectionIsChecked) {
    EXPECT_EQ(conv_case_of(Composition{1, 2}, Composition{1, 2}), ConvCase::EvenEven);
    EXPECT_EQ(conv_case_of(Composition{3}, Composition{1, 2}), ConvCase::OddEven);
    EXPECT_THROW(conv_T(Composition{1, 2}, Composition{1, 2}, ConvCase::OddOdd, ctx), std::exception);
}

TEST(SchurTruncated, SingleOddBox) {
    const SchurDiagram d(2, {{1, 1, 2, 1}});
    EXPECT_EQ(schur_truncated(d, 5), 2 * (Rational(1) + Rational(1, 9) + Rational(1, 25)));
    EXPECT_THROW(schur_truncated(d, 0), DomainError);
}

// Anti-hook Schur sums equal Kaneko-Yamamoto partial sums exactly.
TEST(SchurTruncated, AntiHookMatchesKanekoYamamotoPartials) {
    std::mt19937 rng(5);
    int pairs = 0;
    while (pairs < 12) {
        const Composition k = random_composition(rng, 3, 3), l = random_composition(rng, 3, 3);
        const std::size_t cells = k.depth() + l.depth() - 1;
        if (cells > 4) continue;
        ++pairs;
        const SchurDiagram d = anti_hook_ky(k, l);
        const long top = cells <= 3 ? 50 : 20;
        for (long b = 1; b <= top; ++b)
            ASSERT_EQ(schur_truncated(d, b), ky_partial(k, l, b)) << k.str() << " | " << l.str() << " bound " << b;
    }
}

TEST(SchurTruncated, ModTwoAntiHooksMatchConvolutedPartials) {
    struct Case {
        Composition k, l;
        ConvCase c;
        bool s_family;
    };
    const std::vector<Case> cases{
        {Composition{1, 2}, Composition{1, 2}, ConvCase::EvenEven, false},
        {Composition{2, 1, 2}, Composition{1, 3}, ConvCase::OddEven, false},
        {Composition{1, 2}, Composition{2, 1, 1}, ConvCase::EvenOdd, false},
        {Composition{2}, Composition{1, 1, 2}, ConvCase::OddOdd, false},
        {Composition{1, 2}, Composition{2, 2}, ConvCase::EvenEven, true},
        {Composition{1, 1, 2}, Composition{3}, ConvCase::OddOdd, true},
    };
    for (const auto& c : cases) {
        const SchurDiagram d = anti_hook_mod2(c.k, c.l, c.c, c.s_family);
        for (long n = 1; n <= 25; ++n)
            ASSERT_EQ(schur_truncated(d, anti_hook_mod2_bound(c.c, c.s_family, n)), conv_partial(c.k, c.l, c.c, c.s_family, n))
                << conv_case_name(c.c) << (c.s_family ? " S " : " T ") << c.k.str() << " | " << c.l.str() << " n=" << n;
    }
}

TEST(SchurDiagramShape, ValidationAndJson) {
    EXPECT_THROW(SchurDiagram(1, {}), ShapeError);
    EXPECT_THROW(SchurDiagram(1, {{1, 1, 2, 0}, {1, 3, 2, 0}}), ShapeError);
    EXPECT_THROW(SchurDiagram(2, {{1, 1, 2, 2}}), ShapeError);
    EXPECT_THROW(SchurDiagram(1, {{1, 1, 0, 0}}), ShapeError);
    EXPECT_THROW(SchurDiagram(1, {{1, 2, 1, 0}, {2, 3, 1, 0}}), ShapeError);  // not a skew shape
    const SchurDiagram d = anti_hook_ky(Composition{1, 2}, Composition{1, 2});
    const SchurDiagram back = SchurDiagram::from_json(d.to_json());
    EXPECT_EQ(back.to_json(), d.to_json());
    EXPECT_THROW(SchurDiagram::from_json(nlohmann::json{{"cells", {{{"row", 1}}}}}), ShapeError);
}

TEST(AllowablePaths, SmallDiagrams) {
    EXPECT_TRUE(allowable_path_check(SchurDiagram(1, {{1, 1, 2, 0}})));
    EXPECT_FALSE(allowable_path_check(SchurDiagram(1, {{1, 1, 1, 0}})));
    EXPECT_TRUE(allowable_path_check(SchurDiagram(1, {{1, 1, 1, 0}, {2, 1, 2, 0}})));
    EXPECT_FALSE(allowable_path_check(SchurDiagram(1, {{1, 1, 2, 0}, {2, 1, 1, 0}})));
}

TEST(AllowablePaths, AntiHooksOfConvergentPairs) {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const Composition k = random_composition(rng, 3, 3), l = random_composition(rng, 3, 3);
        EXPECT_TRUE(ky_series(k, l).convergent());
        EXPECT_TRUE(allowable_path_check(anti_hook_ky(k, l))) << k.str() << " | " << l.str();
    }
}

}  // namespace
}  // namespace mzv
