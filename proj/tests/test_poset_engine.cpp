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
#include "mzv/poset.hpp"
#include "support/oracles.hpp"

namespace mzv {
namespace {

using namespace oracle;

class Posets : public ::testing::Test {
protected:
    PrecisionGuard guard{128};
    Context ctx;
    static double gap(const ApproxReal& a, const ApproxReal& b) { return std::abs((a.value - b.value).to_double()); }
    static double gap(const ApproxReal& a, const Real& b) { return std::abs((a.value - b).to_double()); }
};

TEST_F(Posets, ChainValues) {
    EXPECT_LT(gap(evaluate_poset(chain_poset(Composition{2}, 1), ctx), zeta(Composition{2}, ctx)), 1e-30);
    EXPECT_LT(gap(evaluate_poset(chain_poset(Composition{2}, 2), ctx), T_value(Composition{2}, ctx)), 1e-15);
    EXPECT_LT(gap(evaluate_poset(chain_poset(Composition{1}, 3, {-1}), ctx), const_log2()), 1e-15);
    EXPECT_THROW(chain_poset(Composition{2}, 1, {-1}), PosetError);
}

TEST_F(Posets, LevelTwoChainsAreTValues) {
    for (const Composition& k : {Composition{2}, Composition{3}, Composition{1, 2}, Composition{2, 2}, Composition{1, 3},
                                 Composition{1, 1, 2}, Composition{2, 3}, Composition{1, 1, 3}, Composition{1, 2, 2}})
        EXPECT_LT(gap(evaluate_poset(chain_poset(k, 2), ctx), T_value(k, ctx)), 1e-6) << k.str();
}

TEST_F(Posets, EmptyPosetIsOne) {
    EXPECT_TRUE(evaluate_poset(LabeledPoset(1, {}, {}), ctx).value == Real(1L));
}

// int_0^1 Li_2(x)^2 dx / x = sum_{m,n} 1 / (m^2 n^2 (m + n)), truncated at 2000 (tail < 1e-6).
TEST_F(Posets, ProductPosetAgainstDoubleSum) {
    long double s = 0;
    for (long m = 1; m <= 2000; ++m)
        for (long n = 1; n <= 2000; ++n)
            s += 1.0L / (static_cast<long double>(m) * m * n * n * (m + n));
    const ApproxReal v = evaluate_poset(product_poset(Composition{2}, Composition{2}, 1), ctx);
    EXPECT_LT(std::abs(v.to_double() - static_cast<double>(s)), 1e-5);
    EXPECT_LT(gap(int_LL(Composition{2}, Composition{2}, ctx), v), 1e-30);
}

TEST_F(Posets, ConvolutionPosetIsKanekoYamamoto) {
    EXPECT_LT(gap(evaluate_poset(ky_poset(Composition{2}, {}, Composition{2}), ctx), ky_zeta(Composition{2}, Composition{2}, ctx)),
              1e-6);
    for (const auto& [k, l] : std::vector<std::pair<Composition, Composition>>{
             {Composition{1, 2}, Composition{1, 2}}, {Composition{2, 1}, Composition{2}}, {Composition{1}, Composition{1, 1, 2}}})
        EXPECT_LT(gap(evaluate_poset(ky_poset(k, {}, l), ctx), ky_zeta(k, l, ctx)), 1e-6) << k.str() << " | " << l.str();
}

TEST_F(Posets, ExtensionCounts) {
    // Two incomparable two-node chains: C(4, 2) shuffles.
    const LabeledPoset two(1, {1, 0, 1, 0}, {{0, 1}, {2, 3}});
    EXPECT_EQ(total(linear_extension_words(two)), 6);
    EXPECT_EQ(total(linear_extension_words(chain_poset(Composition{2, 3}, 1))), 1);
}

TEST_F(Posets, WordDictionary) {
    EXPECT_LT(gap(word_value(IntegralWord{1, {1, 0}}, ctx), zeta(Composition{2}, ctx)), 1e-30);
    EXPECT_LT(gap(word_value(IntegralWord{3, {-1, 0}}, ctx), const_pi() * const_pi() / Real(12L)), 1e-15);
    const ApproxReal y = word_value(IntegralWord{2, {1, 0}}, ctx);
    EXPECT_LT(gap(y, T_value(Composition{2}, ctx)), 1e-15);
    EXPECT_LT(gap(y, word_value(IntegralWord{3, {1, 0}}, ctx) + word_value(IntegralWord{3, {-1, 0}}, ctx)), 1e-30);
    EXPECT_THROW(word_value(IntegralWord{1, {0, 1}}, ctx), DomainError);
    EXPECT_THROW(word_value(IntegralWord{1, {1, 1}}, ctx), DomainError);
}

TEST_F(Posets, InadmissiblePosetsAreRejected) {
    EXPECT_THROW(evaluate_poset(LabeledPoset(1, {0, 0}, {{0, 1}}), ctx), DomainError);
    EXPECT_THROW(evaluate_poset(LabeledPoset(1, {1, 1}, {{0, 1}}), ctx), DomainError);
    EXPECT_THROW(LabeledPoset(1, {1, 0}, {{0, 1}, {1, 0}}), PosetError);
    EXPECT_THROW(LabeledPoset(1, {-1, 0}, {{0, 1}}), PosetError);
}

// I(X) = I(X + a<b) + I(X + b<a) as word multisets (exactly) and numerically.
TEST_F(Posets, ShuffleIdentityOnRandomPosets) {
    std::mt19937 rng(30);
    int tested = 0;
    while (tested < 30) {
        const std::size_t n = 3 + rng() % 5;
        const int level = rng() % 2 ? 3 : 1;
        const LabeledPoset p = random_admissible(rng, n, level);
        std::vector<std::pair<int, int>> free;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (!p.comparable(a, b)) free.emplace_back(static_cast<int>(a), static_cast<int>(b));
        if (free.empty()) continue;
        ++tested;
        const auto [a, b] = free[rng() % free.size()];
        const LabeledPoset ab = p.with_relation(a, b), ba = p.with_relation(b, a);
        WordMultiset joined = linear_extension_words(ab);
        for (const auto& [w, c] : linear_extension_words(ba)) joined[w] += c;
        const WordMultiset whole = linear_extension_words(p);
        EXPECT_EQ(whole, joined) << p.to_json().dump();
        EXPECT_EQ(whole, shuffle_words(p)) << p.to_json().dump();
        EXPECT_EQ(total(whole), count_extensions(p));
        const ApproxReal lhs = evaluate_poset(p, ctx);
        const ApproxReal rhs = evaluate_poset(ab, ctx) + evaluate_poset(ba, ctx);
        EXPECT_LT(gap(lhs, rhs), 1e-6) << p.to_json().dump();
    }
}

TEST_F(Posets, ExtensionCountMatchesDynamicProgramming) {
    std::mt19937 rng(10);
    for (int trial = 0; trial < 20; ++trial) {
        const LabeledPoset p = random_admissible(rng, 4 + rng() % 7, 1);
        EXPECT_EQ(total(linear_extension_words(p)), count_extensions(p));
    }
}

TEST_F(Posets, JsonForms) {
    const nlohmann::json named = nlohmann::json::parse(R"({"level": 1, "nodes": ["a", "b"], "covers": [["a", "b"]],
                                                            "labels": {"a": 1, "b": 0}})");
    const LabeledPoset p = LabeledPoset::from_json(named);
    EXPECT_LT(gap(evaluate_poset(p, ctx), zeta(Composition{2}, ctx)), 1e-30);
    const LabeledPoset q = LabeledPoset::from_json(p.to_json());
    EXPECT_EQ(q.labels(), p.labels());
    EXPECT_THROW(LabeledPoset::from_json(nlohmann::json::parse(R"({"level": 1, "nodes": ["a"], "covers": [["a", "z"]],
                                                                  "labels": {"a": 1}})")),
                 PosetError);
    EXPECT_THROW(LabeledPoset::from_json(nlohmann::json::parse(R"({"level": 1, "covers": []})")), PosetError);
    EXPECT_THROW(LabeledPoset::from_json(nlohmann::json::parse(R"({"level": 1, "nodes": ["a"], "covers": [],
                                                                  "labels": {}})")),
                 PosetError);
}

TEST_F(Posets, SymbolicCombination) {
    const RationalCombo c = poset_combo(product_poset(Composition{1}, Composition{2}, 1));
    EXPECT_FALSE(c.empty());
    EXPECT_LT(gap(c.evaluate(ctx), evaluate_poset(product_poset(Composition{1}, Composition{2}, 1), ctx)), 1e-30);
    EXPECT_NE(c.str().find("zeta("), std::string::npos);
}

}  // namespace
}  // namespace mzv
