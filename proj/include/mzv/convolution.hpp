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

// Convoluted values: Kaneko-Yamamoto zeta(k * l*), its alternating and
// level-two analogues, and the xi / psi families built on them.

#ifndef MZV_CONVOLUTION_HPP
#define MZV_CONVOLUTION_HPP

#include <string>

#include "mzv/approx_real.hpp"
#include "mzv/composition.hpp"
#include "mzv/harmonic.hpp"
#include "mzv/nested_sum.hpp"
#include "mzv/rational.hpp"
#include "mzv/series.hpp"
#include "mzv/values.hpp"

namespace mzv {

/// Depth parities of (k, l) in a convoluted T or S value.
enum class ConvCase { EvenEven, OddOdd, EvenOdd, OddEven };

inline std::string conv_case_name(ConvCase c) {
    switch (c) {
        case ConvCase::EvenEven: return "even-even";
        case ConvCase::OddOdd: return "odd-odd";
        case ConvCase::EvenOdd: return "even-odd";
        case ConvCase::OddEven: return "odd-even";
    }
    return "?";
}

/// The case fixed by the depths of k and l.
inline ConvCase conv_case_of(const Composition& k, const Composition& l) {
    const bool ke = k.depth() % 2 == 0, le = l.depth() % 2 == 0;
    if (ke && le) return ConvCase::EvenEven;
    if (!ke && !le) return ConvCase::OddOdd;
    return ke ? ConvCase::EvenOdd : ConvCase::OddEven;
}

namespace detail {

inline void add_inner(SeriesSpec& s, Chain c, Affine bound) {
    if (!c.slots.empty()) s.inner.push_back({std::move(c), bound});
}

inline void require_nonempty(const Composition& k, const Composition& l, const char* name) {
    if (k.empty() || l.empty()) throw DomainError(std::string(name) + ": both indices must be nonempty");
}

/// Weight-preserving description of the sum over n of X_n(k') Y_n(l') / m(n)^{k_r + l_s}.
inline SeriesSpec conv_series(Chain kc, Affine kb, Chain lc, Affine lb, Affine m, int power, int sign, long coeff) {
    SeriesSpec s;
    s.denominators.push_back({m, power});
    s.sign = sign;
    s.sign_index = {1, 0};
    add_inner(s, std::move(kc), kb);
    add_inner(s, std::move(lc), lb);
    s.coefficient = Real(coeff);
    return s;
}

}  // namespace detail

/// Series of zeta((k; sigma) * (l; eps)*): signs on the last entries give (sigma_r eps_s)^n.
inline SeriesSpec ky_series(const Composition& k, const Composition& l) {
    detail::require_nonempty(k, l, "ky_zeta");
    return detail::conv_series(plain_chain(k.init(), Link::Strict), {1, -1}, plain_chain(l.init(), Link::Weak), {1, 0},
                               {1, 0}, k.last() + l.last(), k.last_sign() * l.last_sign(), 1);
}

/// zeta(k * l*) = sum_n zeta_{n-1}(k_1..k_{r-1}) zeta*_n(l_1..l_{s-1}) / n^{k_r + l_s}.
inline ApproxReal ky_zeta(const Composition& k, const Composition& l, Context& ctx = default_context()) {
    return ctx.eval(ky_series(k, l));
}

/// Alternating version; entry signs of k and l are the sigma and eps signs.
inline ApproxReal alt_ky(const Composition& k, const Composition& l, Context& ctx = default_context()) {
    return ky_zeta(k, l, ctx);
}

/// T(k * l), 2 sum_n X_n(k') Y_n(l') / m^{k_r + l_s} with X, Y in {T, S} by case.
inline SeriesSpec conv_T_series(const Composition& k, const Composition& l, ConvCase c) {
    detail::require_nonempty(k, l, "conv_T");
    if (conv_case_of(k, l) != c)
        throw DomainError("conv_T: depths (" + std::to_string(k.depth()) + ", " + std::to_string(l.depth()) +
                          ") do not match case " + conv_case_name(c));
    const Affine b{2, -1};
    const int w = k.last() + l.last();
    const Chain kt = interleaved_chain(k.init(), Parity::Odd);
    switch (c) {
        case ConvCase::EvenEven:
            return detail::conv_series(kt, b, interleaved_chain(l.init(), Parity::Odd), b, {2, 0}, w, 1, 2);
        case ConvCase::OddOdd:
            return detail::conv_series(kt, b, interleaved_chain(l.init(), Parity::Odd), b, {2, -1}, w, 1, 2);
        case ConvCase::EvenOdd:
            return detail::conv_series(kt, b, interleaved_chain(l.init(), Parity::Even), b, {2, 0}, w, 1, 2);
        case ConvCase::OddEven:
            return detail::conv_series(kt, b, interleaved_chain(l.init(), Parity::Even), b, {2, -1}, w, 1, 2);
    }
    throw std::logic_error("conv_T: unknown case");
}

inline ApproxReal conv_T(const Composition& k, const Composition& l, ConvCase c, Context& ctx = default_context()) {
    return ctx.eval(conv_T_series(k, l, c));
}

/// S(k * l); only the equal-parity cases exist.
inline SeriesSpec conv_S_series(const Composition& k, const Composition& l, ConvCase c) {
    detail::require_nonempty(k, l, "conv_S");
    if (c != ConvCase::EvenEven && c != ConvCase::OddOdd) throw DomainError("conv_S: only even-even and odd-odd exist");
    if (conv_case_of(k, l) != c)
        throw DomainError("conv_S: depths (" + std::to_string(k.depth()) + ", " + std::to_string(l.depth()) +
                          ") do not match case " + conv_case_name(c));
    const Affine b{2, -1};
    const Affine m = c == ConvCase::EvenEven ? Affine{2, -1} : Affine{2, 0};
    return detail::conv_series(interleaved_chain(k.init(), Parity::Even), b, interleaved_chain(l.init(), Parity::Even),
                               b, m, k.last() + l.last(), 1, 2);
}

inline ApproxReal conv_S(const Composition& k, const Composition& l, ConvCase c, Context& ctx = default_context()) {
    return ctx.eval(conv_S_series(k, l, c));
}

/// xi(k; s) = zeta(k * ({1}_s)*).
inline ApproxReal xi_value(const Composition& k, int s, Context& ctx = default_context()) {
    if (s < 1) throw DomainError("xi: s must be at least 1");
    return ky_zeta(k, Composition::repeat(1, static_cast<std::size_t>(s)), ctx);
}

/// Exact partial sum of zeta(k * l*) over n <= N.
inline Rational ky_partial(const Composition& k, const Composition& l, long N) {
    detail::require_nonempty(k, l, "ky_partial");
    ChainTable<Rational> kt(plain_chain(k.init(), Link::Strict)), lt(plain_chain(l.init(), Link::Weak));
    Rational sum = 0;
    const int w = k.last() + l.last();
    const int sg = k.last_sign() * l.last_sign();
    for (long n = 1; n <= N; ++n) {
        Rational a = k.depth() > 1 ? (n > 1 ? kt.value_at(n - 1) : Rational(0)) : Rational(1);
        Rational b = l.depth() > 1 ? lt.value_at(n) : Rational(1);
        Rational term = a * b * inverse_power(n, w);
        if (sg < 0 && (n & 1)) term = -term;
        sum += term;
    }
    return sum;
}

/// Exact partial sum of a convoluted T or S value over n <= N.
inline Rational conv_partial(const Composition& k, const Composition& l, ConvCase c, bool s_family, long N) {
    SeriesSpec spec = s_family ? conv_S_series(k, l, c) : conv_T_series(k, l, c);
    std::vector<ChainTable<Rational>> tables;
    for (const auto& f : spec.inner) tables.emplace_back(f.chain);
    Rational sum = 0;
    for (long n = 1; n <= N; ++n) {
        Rational term = 2;
        for (std::size_t i = 0; i < tables.size(); ++i) term *= tables[i].value_at(spec.inner[i].bound(n));
        term *= inverse_power(spec.denominators[0].base(n), spec.denominators[0].power);
        sum += term;
    }
    return sum;
}

}  // namespace mzv

#endif  // MZV_CONVOLUTION_HPP
