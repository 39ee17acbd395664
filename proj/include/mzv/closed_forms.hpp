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

// Closed forms for moment integrals and explicit convolution relations.
//
// Every moment integral comes in three flavours:
//   *_closed     the explicit finite expansion,
//   *_recurrence the integration-by-parts recurrence it is derived from,
//   *_oracle     term-wise integration of the defining power series.
// Identities are returned as a pair (left side, right side); callers compare.
//
// Index conventions: k_i is the i-th entry (1-based), k.head(i) the first i
// entries, slice_tail(k, i, j) = (k_{i-j+1}, ..., k_i).

#ifndef MZV_CLOSED_FORMS_HPP
#define MZV_CLOSED_FORMS_HPP

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "mzv/approx_real.hpp"
#include "mzv/composition.hpp"
#include "mzv/convolution.hpp"
#include "mzv/harmonic.hpp"
#include "mzv/poset.hpp"
#include "mzv/quadrature.hpp"
#include "mzv/symbolic.hpp"
#include "mzv/values.hpp"

namespace mzv {

using Sides = std::pair<ApproxReal, ApproxReal>;

namespace detail {

/// (-1)^e for any integer e.
inline int neg1(long e) { return (e % 2 == 0) ? 1 : -1; }

inline ApproxReal signed_term(int s, ApproxReal v) { return s > 0 ? v : -v; }

inline ApproxReal q(const Rational& r) { return ApproxReal::exact(r); }

inline Rational inv_pow(long base, int e) { return inverse_power(base, e); }

/// k_i, 1-based.
inline int K(const Composition& k, long i) { return k.part(static_cast<std::size_t>(i - 1)); }

inline Composition head(const Composition& k, long i) { return k.head(static_cast<std::size_t>(i < 0 ? 0 : i)); }

/// |k_i^j|, the weight of slice_tail(k, i, j).
inline long W(const Composition& k, long i, long j) {
    return slice_tail(k, static_cast<std::size_t>(i), static_cast<std::size_t>(j)).weight();
}

inline Composition sl(const Composition& k, long i, long j) {
    return slice_tail(k, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
}

inline Composition one(int a) { return Composition{a}; }

inline Composition cat(const Composition& a, const Composition& b) { return a.concat(b); }

/// Exact harmonic sum as an ApproxReal; the empty composition gives 1.
inline ApproxReal hs(HarmonicFamily f, const Composition& k, long n) {
    return q(harmonic_sum<Rational>(f, k, n));
}

/// Inner factor for sum_n ... with the family evaluated at its natural bound plus `shift` on n.
inline InnerFactor factor(HarmonicFamily f, const Composition& k, long shift = 0) {
    HarmonicShape s = harmonic_shape(f, k);
    return {s.chain, {s.scale, s.offset + s.scale * shift}};
}

/// sum_{n >= 1} sign^n prod(inner) / m(n)^power; empty chains are dropped.
inline ApproxReal nsum(Context& ctx, std::vector<InnerFactor> inner, Affine m, int power, int sign = 1) {
    SeriesSpec s;
    s.denominators.push_back({m, power});
    s.sign = sign;
    s.sign_index = {1, 0};
    for (auto& f : inner)
        if (!f.chain.slots.empty()) s.inner.push_back(std::move(f));
    require(s.convergent(), "closed form: divergent auxiliary series");
    return ctx.eval(s);
}

/// k with the last entry replaced by value.
inline Composition with_last(const Composition& prefix, int value) { return prefix.appended(value); }

inline ApproxReal Z(const Composition& k, Context& ctx) { return zeta(k, ctx); }
inline ApproxReal Zs(const Composition& k, Context& ctx) { return zeta_star(k, ctx); }
inline ApproxReal T(const Composition& k, Context& ctx) { return T_value_reg(k, ctx); }
inline ApproxReal S(const Composition& k, Context& ctx) { return S_value(k, ctx); }

inline long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline void require_nonempty(const Composition& k, const char* what) {
    if (k.empty()) throw DomainError(std::string(what) + ": composition must be nonempty");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Moments of Li_k(x).

/// int_0^1 x^{n-1} Li_k(x) dx by the explicit expansion.
inline ApproxReal li_moment_closed(const Composition& k, long n, Context& ctx = default_context()) {
    using namespace detail;
    require_nonempty(k, "li_moment");
    const long r = static_cast<long>(k.depth());
    const int kr = K(k, r);
    ApproxReal sum(0L);
    for (int j = 1; j <= kr - 1; ++j) sum += signed_term(neg1(j - 1), Z(with_last(head(k, r - 1), kr + 1 - j), ctx) * inv_pow(n, j));
    sum += signed_term(neg1(k.weight() - r), hs(HarmonicFamily::MhsStar, cat(one(1), head(k, r - 1)), n) * inv_pow(n, kr));
    for (long l = 1; l <= r - 1; ++l) {
        const int s = neg1(W(k, r, l) - l);
        for (int j = 1; j <= K(k, r - l) - 1; ++j) {
            ApproxReal t = hs(HarmonicFamily::MhsStar, cat(one(j), sl(k, r - 1, l - 1)), n) *
                           Z(with_last(head(k, r - l - 1), K(k, r - l) + 1 - j), ctx);
            sum += signed_term(s * neg1(j - 1), t * inv_pow(n, kr));
        }
    }
    return sum;
}

/// The same moment through the recurrence with sum_{j <= n} of depth r - 1 moments.
inline ApproxReal li_moment_recurrence(const Composition& k, long n, Context& ctx = default_context()) {
    using namespace detail;
    require_nonempty(k, "li_moment");
    std::vector<ApproxReal> prev;  // J_{i-1}(1..n)
    for (long m = 1; m <= n; ++m) prev.push_back(q(Rational(1, m)));
    for (long i = 1; i <= static_cast<long>(k.depth()); ++i) {
        const int ki = K(k, i);
        std::vector<ApproxReal> cur;
        ApproxReal acc(0L);
        for (long m = 1; m <= n; ++m) {
            acc += prev[static_cast<std::size_t>(m - 1)];
            ApproxReal v(0L);
            for (int j = 1; j <= ki - 1; ++j) v += signed_term(neg1(j - 1), Z(with_last(head(k, i - 1), ki + 1 - j), ctx) * inv_pow(m, j));
            v += signed_term(neg1(ki - 1), acc * inv_pow(m, ki));
            cur.push_back(v);
        }
        prev = std::move(cur);
    }
    return prev.back();
}

inline ApproxReal li_moment_oracle(const Composition& k, long n, Context& ctx = default_context()) {
    detail::require_nonempty(k, "li_moment");
    return termwise_integral(plain_chain(k.unsigned_copy(), Link::Strict), n - 1, ctx);
}

/// int_0^1 x^{n-1} log^r(1 - x) dx = (-1)^r r! zeta*_n({1}_r) / n.
inline ApproxReal log_moment_closed(int r, long n) {
    Rational v = mhss(Composition::repeat(1, static_cast<std::size_t>(r)), n) * Rational(detail::factorial(r), n);
    if (r % 2) v = -v;
    return ApproxReal::exact(v);
}

inline ApproxReal log_moment_quadrature(int r, long n) {
    return tanh_sinh([&](const Real& x, const Real& om) { return pow(x, n - 1) * pow(log(om), r); }).value;
}

// ---------------------------------------------------------------------------
// Kaneko-Yamamoto relations.

/// One side of the K-Y relation for (k, l); the relation says ky_side(k, l) == ky_side(l, k).
inline ApproxReal ky_side(const Composition& k, const Composition& l, Context& ctx = default_context()) {
    using namespace detail;
    require_nonempty(k, "ky_side");
    require_nonempty(l, "ky_side");
    const long r = static_cast<long>(k.depth()), s = static_cast<long>(l.depth());
    const int kr = K(k, r), ls = K(l, s);
    ApproxReal sum(0L);
    for (int j = 1; j <= kr - 1; ++j)
        sum += signed_term(neg1(j - 1), Z(with_last(head(k, r - 1), kr + 1 - j), ctx) * Z(with_last(head(l, s - 1), ls + j), ctx));
    sum += signed_term(neg1(k.weight() - r), ky_zeta(l, cat(one(1), k), ctx));
    for (long i = 1; i <= r - 1; ++i) {
        const int sg = neg1(W(k, r, i) - i);
        for (int j = 1; j <= K(k, r - i) - 1; ++j)
            sum += signed_term(sg * neg1(j - 1), Z(with_last(head(k, r - i - 1), K(k, r - i) + 1 - j), ctx) *
                                                     ky_zeta(l, cat(one(j), sl(k, r, i)), ctx));
    }
    return sum;
}

inline Sides ky_relation(const Composition& k, const Composition& l, Context& ctx = default_context()) {
    return {ky_side(k, l, ctx), ky_side(l, k, ctx)};
}

/// The r = 2, s = 1 case written out. `printed_limit` uses k_2 - 1 as the inner
/// limit of the last sum as stated; the derivation from ky_side gives k_1 - 1.
inline Sides ky_a3(int k1, int k2, int l1, bool printed_limit = false, Context& ctx = default_context()) {
    using namespace detail;
    ApproxReal lhs(0L), rhs(0L);
    for (int j = 1; j <= k2 - 1; ++j) lhs += signed_term(neg1(j - 1), Z({k1, k2 + 1 - j}, ctx) * Z({l1 + j}, ctx));
    lhs += signed_term(neg1(k1 + k2), Zs({1, k1, k2 + l1}, ctx));
    const int limit = printed_limit ? k2 - 1 : k1 - 1;
    for (int j = 1; j <= limit; ++j)
        lhs += signed_term(neg1(k2 - 1) * neg1(j - 1), Z({k1 + 1 - j}, ctx) * Zs({j, l1 + k2}, ctx));
    for (int j = 1; j <= l1 - 1; ++j) rhs += signed_term(neg1(j - 1), Z({l1 + 1 - j}, ctx) * Z({k1, k2 + j}, ctx));
    rhs += signed_term(neg1(l1 - 1), ky_zeta({k1, k2}, {1, l1}, ctx));
    return {lhs, rhs};
}

/// a3 with the convolution expanded into star values.
inline Sides ky_a4(int k1, int k2, int l1, bool printed_limit = false, Context& ctx = default_context()) {
    using namespace detail;
    ApproxReal lhs = signed_term(1, Zs({1, k1, k2 + l1}, ctx) * ApproxReal(neg1(l1 - 1) + neg1(k1 + k2 - 1)));
    lhs += signed_term(neg1(l1 - 1), Zs({k1, 1, k2 + l1}, ctx));
    ApproxReal rhs(0L);
    for (int j = 1; j <= k2 - 1; ++j) rhs += signed_term(neg1(j - 1), Z({k1, k2 + 1 - j}, ctx) * Z({l1 + j}, ctx));
    const int limit = printed_limit ? k2 - 1 : k1 - 1;
    for (int j = 1; j <= limit; ++j)
        rhs += signed_term(-neg1(k2) * neg1(j - 1), Z({k1 + 1 - j}, ctx) * Zs({j, l1 + k2}, ctx));
    for (int j = 1; j <= l1 - 1; ++j) rhs += signed_term(-neg1(j - 1), Z({l1 + 1 - j}, ctx) * Z({k1, k2 + j}, ctx));
    rhs += signed_term(neg1(l1 - 1), Zs({k1 + 1, k2 + l1}, ctx));
    rhs += signed_term(neg1(l1 - 1), Zs({1, k1 + k2 + l1}, ctx));
    return {lhs, rhs};
}

/// xi(k; s + 1) against its expansion (the K-Y relation with l = {1}_s).
inline Sides xi_expansion(const Composition& k, int s, Context& ctx = default_context()) {
    return {xi_value(k, s + 1, ctx), ky_side(k, Composition::repeat(1, static_cast<std::size_t>(s)), ctx)};
}

/// Left side of the log^{2m} relation: weighted sums of T_n({1}_odd) and S_n({1}_{2m}).
inline ApproxReal czt_lhs(const Composition& k, int m, Context& ctx = default_context()) {
    using namespace detail;
    require_nonempty(k, "czt");
    const int kr = k.last();
    const Composition kp = k.init();
    ApproxReal sum(0L);
    for (int j = 0; j <= m - 1; ++j) {
        ApproxReal ser = nsum(ctx, {factor(HarmonicFamily::Mhs, kp, -1), factor(HarmonicFamily::T, Composition::repeat(1, 2 * j + 1))},
                              {1, 0}, kr + 1);
        sum += bar_zeta(2 * m - 1 - 2 * j) * ser * Rational(2);
    }
    sum += nsum(ctx, {factor(HarmonicFamily::Mhs, kp, -1), factor(HarmonicFamily::S, Composition::repeat(1, 2 * m))}, {1, 0}, kr + 1);
    return sum;
}

namespace detail {

/// sum_n T_n({1}_{2m-1}) zeta*_n(c) / n^p.
inline ApproxReal t_ones_star(int m, const Composition& c, int p, Context& ctx) {
    return nsum(ctx, {factor(HarmonicFamily::T, Composition::repeat(1, 2 * m - 1)), factor(HarmonicFamily::MhsStar, c)}, {1, 0}, p);
}

}  // namespace detail

inline ApproxReal czt_rhs(const Composition& k, int m, Context& ctx = default_context()) {
    using namespace detail;
    require_nonempty(k, "czt");
    const long r = static_cast<long>(k.depth());
    const int kr = k.last();
    const Composition ones = Composition::repeat(1, static_cast<std::size_t>(2 * m - 1));
    ApproxReal sum(0L);
    for (int j = 1; j <= kr - 1; ++j)
        sum += signed_term(neg1(j - 1), Z(with_last(head(k, r - 1), kr + 1 - j), ctx) * T(ones.appended(j + 1), ctx) *
                                            Rational(Integer(1) << j));
    sum += signed_term(neg1(k.weight() - r), t_ones_star(m, cat(one(1), head(k, r - 1)), kr + 1, ctx));
    for (long l = 1; l <= r - 1; ++l) {
        const int sg = neg1(W(k, r, l) - l);
        for (int j = 1; j <= K(k, r - l) - 1; ++j)
            sum += signed_term(sg * neg1(j - 1), Z(with_last(head(k, r - l - 1), K(k, r - l) + 1 - j), ctx) *
                                                     t_ones_star(m, cat(one(j), sl(k, r - 1, l - 1)), kr + 1, ctx));
    }
    return sum;
}

inline Sides czt(const Composition& k, int m, Context& ctx = default_context()) {
    return {czt_lhs(k, m, ctx), czt_rhs(k, m, ctx)};
}

/// The k = ({2}_{r-1}, k) case; the star sums carry first entry j = 1.
inline Sides cztb(int r, int k, int m, Context& ctx = default_context()) {
    using namespace detail;
    const Composition twos = Composition::repeat(2, static_cast<std::size_t>(r - 1));
    const Composition kk = twos.appended(k);
    const Composition ones = Composition::repeat(1, static_cast<std::size_t>(2 * m - 1));
    ApproxReal rhs(0L);
    for (int j = 1; j <= k - 1; ++j)
        rhs += signed_term(neg1(j - 1), Z(twos.appended(k + 1 - j), ctx) * T(ones.appended(j + 1), ctx) * Rational(Integer(1) << j));
    for (int l = 1; l <= r; ++l)
        rhs += signed_term(neg1(l + k), Z(Composition::repeat(2, static_cast<std::size_t>(r - l)), ctx) *
                                            t_ones_star(m, cat(one(1), Composition::repeat(2, static_cast<std::size_t>(l - 1))), k + 1, ctx));
    return {czt_lhs(kk, m, ctx), rhs};
}

// ---------------------------------------------------------------------------
// Level two: moments of A(k; x).

/// int_0^1 A(k, 1; x) dx through the series (term-wise).
inline ApproxReal a_one_integral_oracle(const Composition& k, Context& ctx = default_context()) {
    return termwise_integral(interleaved_chain(k.unsigned_copy().appended(1), Parity::Odd), 0, ctx);
}

/// int_0^1 A(k, 1; x) dx = -2 log 2 T(k) + 2 T(k + 1) + 4 t(1, k) - S(1, k) for a single entry k.
inline ApproxReal a_one_integral_depth1(int k, Context& ctx = default_context()) {
    using namespace detail;
    ApproxReal v = -(ApproxReal(const_log2()) * T({k}, ctx) * Rational(2));
    v += T({k + 1}, ctx) * Rational(2);
    v += t_value({1, k}, ctx) * Rational(4);
    v -= S({1, k}, ctx);
    return v;
}

/// int_0^1 A(k, 1; x) dx: the depth-one formula where it applies, the series otherwise.
inline ApproxReal a_one_integral(const Composition& k, Context& ctx = default_context()) {
    if (k.depth() == 1 && k.last() >= 2) return a_one_integral_depth1(k.last(), ctx);
    return a_one_integral_oracle(k, ctx);
}

/// Moment int_0^1 x^{2n-2} A(k; x) dx (odd_power = false) or x^{2n-1} (odd_power = true), explicit.
inline ApproxReal a_moment_closed(const Composition& k, long n, bool odd_power, Context& ctx = default_context()) {
    using namespace detail;
    require_nonempty(k, "a_moment");
    const long r = static_cast<long>(k.depth());
    const int kr = K(k, r);
    const long d = odd_power ? 2 * n : 2 * n - 1;
    auto Tn = [&](const Composition& c) { return hs(HarmonicFamily::T, c, n); };
    auto Sn = [&](const Composition& c) { return hs(HarmonicFamily::S, c, n); };
    auto AI = [&](const Composition& c) { return a_one_integral(c, ctx); };
    auto Tl = [&](long i, int j) { return T(with_last(head(k, i - 1), K(k, i) + 1 - j), ctx); };  // T(k_{i-1}, k_i + 1 - j)
    const Rational top = inv_pow(d, kr);
    ApproxReal sum(0L);
    for (int j = 1; j <= kr - 1; ++j) sum += signed_term(neg1(j - 1), Tl(r, j) * inv_pow(d, j));
    const long m = r / 2;
    const bool even_depth = r % 2 == 0;
    if (even_depth && !odd_power) {  // depth 2m, power 2n-2
        sum += signed_term(neg1(k.weight()), Tn(cat(one(1), head(k, 2 * m - 1))) * top);
        for (long i = 1; i <= m - 1; ++i)
            for (int j = 1; j <= K(k, 2 * m - 2 * i) - 1; ++j)
                sum += signed_term(neg1(W(k, 2 * m, 2 * i)) * neg1(j - 1), Tl(2 * m - 2 * i, j) * Tn(cat(one(j), sl(k, 2 * m - 1, 2 * i - 1))) * top);
        for (long i = 0; i <= m - 1; ++i)
            for (int j = 1; j <= K(k, 2 * m - 2 * i - 1) - 1; ++j)
                sum -= signed_term(neg1(W(k, 2 * m, 2 * i + 1)) * neg1(j - 1), Tl(2 * m - 2 * i - 1, j) * Sn(cat(one(j), sl(k, 2 * m - 1, 2 * i))) * top);
        for (long i = 0; i <= m - 1; ++i)
            sum -= signed_term(neg1(W(k, 2 * m, 2 * i + 1)), AI(head(k, 2 * m - 2 * i - 1)) * Tn(sl(k, 2 * m - 1, 2 * i)) * top);
    } else if (!even_depth && odd_power) {  // depth 2m+1, power 2n-1
        sum -= signed_term(neg1(k.weight()), Tn(cat(one(1), head(k, 2 * m))) * top);
        for (long i = 0; i <= m - 1; ++i)
            for (int j = 1; j <= K(k, 2 * m - 2 * i) - 1; ++j)
                sum -= signed_term(neg1(W(k, r, 2 * i + 1)) * neg1(j - 1), Tl(2 * m - 2 * i, j) * Tn(cat(one(j), sl(k, 2 * m, 2 * i))) * top);
        for (long i = 0; i <= m - 1; ++i)
            for (int j = 1; j <= K(k, 2 * m - 2 * i - 1) - 1; ++j)
                sum += signed_term(neg1(W(k, r, 2 * i + 2)) * neg1(j - 1), Tl(2 * m - 2 * i - 1, j) * Sn(cat(one(j), sl(k, 2 * m, 2 * i + 1))) * top);
        for (long i = 0; i <= m - 1; ++i)
            sum += signed_term(neg1(W(k, r, 2 * i + 2)), AI(head(k, 2 * m - 2 * i - 1)) * Tn(sl(k, 2 * m, 2 * i + 1)) * top);
    } else if (!even_depth && !odd_power) {  // depth 2m+1, power 2n-2
        sum -= signed_term(neg1(k.weight()), Sn(cat(one(1), head(k, 2 * m))) * top);
        for (long i = 1; i <= m; ++i)
            for (int j = 1; j <= K(k, 2 * m + 1 - 2 * i) - 1; ++j)
                sum += signed_term(neg1(W(k, r, 2 * i)) * neg1(j - 1), Tl(2 * m + 1 - 2 * i, j) * Tn(cat(one(j), sl(k, 2 * m, 2 * i - 1))) * top);
        for (long i = 0; i <= m - 1; ++i)
            for (int j = 1; j <= K(k, 2 * m - 2 * i) - 1; ++j)
                sum -= signed_term(neg1(W(k, r, 2 * i + 1)) * neg1(j - 1), Tl(2 * m - 2 * i, j) * Sn(cat(one(j), sl(k, 2 * m, 2 * i))) * top);
        for (long i = 0; i <= m; ++i)
            sum -= signed_term(neg1(W(k, r, 2 * i + 1)), AI(head(k, 2 * m - 2 * i)) * Tn(sl(k, 2 * m, 2 * i)) * top);
    } else {  // depth 2m, power 2n-1
        sum += signed_term(neg1(k.weight()), Sn(cat(one(1), head(k, 2 * m - 1))) * top);
        for (long i = 1; i <= m; ++i)
            for (int j = 1; j <= K(k, 2 * m + 1 - 2 * i) - 1; ++j)
                sum -= signed_term(neg1(W(k, r, 2 * i - 1)) * neg1(j - 1), Tl(2 * m + 1 - 2 * i, j) * Tn(cat(one(j), sl(k, 2 * m - 1, 2 * i - 2))) * top);
        for (long i = 1; i <= m - 1; ++i)
            for (int j = 1; j <= K(k, 2 * m - 2 * i) - 1; ++j)
                sum += signed_term(neg1(W(k, r, 2 * i)) * neg1(j - 1), Tl(2 * m - 2 * i, j) * Sn(cat(one(j), sl(k, 2 * m - 1, 2 * i - 1))) * top);
        for (long i = 1; i <= m; ++i)
            sum += signed_term(neg1(W(k, r, 2 * i)), AI(head(k, 2 * m - 2 * i)) * Tn(sl(k, 2 * m - 1, 2 * i - 1)) * top);
    }
    return sum;
}

/// The same moment through the pair of integration-by-parts recurrences.
inline ApproxReal a_moment_recurrence(const Composition& k, long n, bool odd_power, Context& ctx = default_context()) {
    using namespace detail;
    require_nonempty(k, "a_moment");
    // P[m] = int x^{2m-2} A(k_i), Q[m] = int x^{2m-1} A(k_i), for m = 1..n.
    std::vector<ApproxReal> P, Q;
    for (long m = 1; m <= n; ++m) {
        P.push_back(q(Rational(1, 2 * m - 1)));
        Q.push_back(q(Rational(1, 2 * m)));
    }
    for (long i = 1; i <= static_cast<long>(k.depth()); ++i) {
        const int ki = K(k, i);
        const Composition prefix = head(k, i - 1);
        const ApproxReal ai = a_one_integral(prefix, ctx);
        std::vector<ApproxReal> P2, Q2;
        ApproxReal accQ(0L), accP(0L);
        for (long m = 1; m <= n; ++m) {
            ApproxReal p(0L), v(0L);
            for (int j = 1; j <= ki - 1; ++j) p += signed_term(neg1(j - 1), T(with_last(prefix, ki + 1 - j), ctx) * inv_pow(2 * m - 1, j));
            p += signed_term(neg1(ki - 1), (ai + accQ * Rational(2)) * inv_pow(2 * m - 1, ki));
            accQ += Q[static_cast<std::size_t>(m - 1)];
            accP += P[static_cast<std::size_t>(m - 1)];
            for (int j = 0; j <= ki - 2; ++j) v += signed_term(neg1(j), T(with_last(prefix, ki - j), ctx) * inv_pow(2 * m, j + 1));
            v += signed_term(neg1(ki - 1), accP * Rational(2) * inv_pow(2 * m, ki));
            P2.push_back(p);
            Q2.push_back(v);
        }
        P = std::move(P2);
        Q = std::move(Q2);
    }
    return odd_power ? Q.back() : P.back();
}

inline ApproxReal a_moment_oracle(const Composition& k, long n, bool odd_power, Context& ctx = default_context()) {
    detail::require_nonempty(k, "a_moment");
    return termwise_integral(interleaved_chain(k.unsigned_copy(), Parity::Odd), odd_power ? 2 * n - 1 : 2 * n - 2, ctx);
}

/// int_0^1 A({1}_r; x) dx as the value -2^{1-r} zeta(r bar) stated for it.
inline ApproxReal aones_stated(int r) {
    if (r < 1) throw DomainError("aones: r must be positive");
    ApproxReal zbar = r == 1 ? ApproxReal(-const_log2()) : -bar_zeta(r);  // zeta(r bar)
    return zbar * Rational(-1, Integer(1) << (r - 1));
}

inline ApproxReal aones_oracle(int r, Context& ctx = default_context()) {
    return a_moment_oracle(Composition::repeat(1, static_cast<std::size_t>(r)), 1, false, ctx);
}

/// Quadrature of ((-1)^r / r!) log^r((1 - x) / (1 + x)).
inline ApproxReal aones_quadrature(int r) {
    return tanh_sinh([&](const Real& x, const Real& om) {
               Real v = pow(log(om / (Real(1L) + x)), r) / Real(detail::factorial(r));
               return r % 2 ? -v : v;
           }).value;
}

enum class LogMomentCase { EE, EO, OE, OO };

inline std::string log_moment_case_name(LogMomentCase c) {
    switch (c) {
        case LogMomentCase::EE: return "ee";
        case LogMomentCase::EO: return "eo";
        case LogMomentCase::OE: return "oe";
        case LogMomentCase::OO: return "oo";
    }
    return "?";
}

/// int_0^1 t^{a} log^{p}((1-t)/(1+t)) dt with a = 2n-2 or 2n-1 and p = 2m or 2m-1.
inline ApproxReal corii_quadrature(LogMomentCase c, long n, int m) {
    const bool odd_t = c == LogMomentCase::OE || c == LogMomentCase::OO;
    const bool odd_log = c == LogMomentCase::EO || c == LogMomentCase::OO;
    const long a = odd_t ? 2 * n - 1 : 2 * n - 2;
    const int p = odd_log ? 2 * m - 1 : 2 * m;
    return tanh_sinh([&](const Real& x, const Real& om) { return pow(x, a) * pow(log(om / (Real(1L) + x)), p); }).value;
}

/// Closed forms in bar zeta and T_n, S_n of ones, as stated except for the
/// odd-odd bar zeta argument: 2j is used since the stated 2j - 2 is undefined
/// at j = 0 (`printed_shift` keeps it and raises DomainError).
/// In the odd-even case the stated S_n weight is twice the true one; the
/// quadrature gives (2m)!/(2n) (2 sum bar_zeta T_n + S_n), used when `corrected_oe`.
inline ApproxReal corii_closed(LogMomentCase c, long n, int m, bool corrected_oe = false, bool printed_shift = false) {
    using namespace detail;
    auto Tn = [&](int len) { return hs(HarmonicFamily::T, Composition::repeat(1, static_cast<std::size_t>(len)), n); };
    auto Sn = [&](int len) { return hs(HarmonicFamily::S, Composition::repeat(1, static_cast<std::size_t>(len)), n); };
    ApproxReal sum(0L);
    switch (c) {
        case LogMomentCase::EE:
            for (int j = 0; j <= m; ++j) sum += bar_zeta(2 * j) * Tn(2 * m - 2 * j);
            return sum * Rational(2 * factorial(2 * m), 2 * n - 1);
        case LogMomentCase::EO:
            for (int j = 1; j <= m; ++j) sum += bar_zeta(2 * j - 1) * Tn(2 * m - 2 * j) * Rational(2);
            sum += Sn(2 * m - 1);
            return sum * Rational(-factorial(2 * m - 1), 2 * n - 1);
        case LogMomentCase::OE:
            for (int j = 1; j <= m; ++j) sum += bar_zeta(2 * j - 1) * Tn(2 * m - 2 * j + 1);
            sum += corrected_oe ? Sn(2 * m) * Rational(1, 2) : Sn(2 * m);
            return sum * Rational(factorial(2 * m), n);
        case LogMomentCase::OO:
            for (int j = 0; j <= m - 1; ++j) {
                const int arg = printed_shift ? 2 * j - 2 : 2 * j;
                if (arg < 0) throw DomainError("corii: bar zeta of a negative argument");
                sum += bar_zeta(arg) * Tn(2 * m - 2 * j - 1);
            }
            return sum * Rational(-factorial(2 * m - 1), n);
    }
    throw std::logic_error("corii: unknown case");
}

// ---------------------------------------------------------------------------
// Level two: T and S relations from I_A.

/// ((-1)^l - (-1)^k) S(1, k + l) against products of depth-one T values, T(1) = 2 log 2.
inline Sides s2t(int k, int l, Context& ctx = default_context()) {
    using namespace detail;
    ApproxReal lhs = S({1, k + l}, ctx) * ApproxReal(neg1(l) - neg1(k));
    ApproxReal rhs(0L);
    for (int j = 1; j <= l; ++j) rhs += signed_term(neg1(j - 1), T({l + 1 - j}, ctx) * T({k + j}, ctx));
    for (int j = 1; j <= k; ++j) rhs += signed_term(neg1(j), T({k + 1 - j}, ctx) * T({l + j}, ctx));
    return {lhs, rhs};
}

/// The k = 1, l = 2p case solved for S(1, 2p + 1).
inline Sides s2t_odd(int p, Context& ctx = default_context()) {
    using namespace detail;
    ApproxReal rhs(0L);
    for (int j = 0; j <= p - 1; ++j) rhs += signed_term(neg1(j - 1), T({2 * p + 1 - j}, ctx) * T({j + 1}, ctx));
    rhs -= signed_term(neg1(p), T({p + 1}, ctx) * T({p + 1}, ctx) * Rational(1, 2));
    return {S({1, 2 * p + 1}, ctx), rhs};
}

inline Sides tt2(int k1, int k2, int l, Context& ctx = default_context()) {
    using namespace detail;
    ApproxReal lhs = signed_term(neg1(l - 1), conv_T({k1, k2}, {1, l}, ConvCase::EvenEven, ctx));
    lhs += signed_term(neg1(k1 + k2 - 1), T({1, k1, k2 + l}, ctx));
    ApproxReal rhs(0L);
    for (int j = 1; j <= k2 - 1; ++j) rhs += signed_term(neg1(j - 1), T({k1, k2 + 1 - j}, ctx) * T({l + j}, ctx));
    for (int j = 1; j <= l - 1; ++j) rhs -= signed_term(neg1(j - 1), T({l + 1 - j}, ctx) * T({k1, k2 + j}, ctx));
    for (int j = 1; j <= k1 - 1; ++j) rhs -= signed_term(neg1(k2) * neg1(j - 1), T({k1 + 1 - j}, ctx) * S({j, k2 + l}, ctx));
    rhs -= signed_term(neg1(k2), T({k2 + l}, ctx) * a_one_integral({k1}, ctx));
    return {lhs, rhs};
}

inline Sides tt3(int k1, int k2, int l1, int l2, Context& ctx = default_context()) {
    using namespace detail;
    ApproxReal lhs = signed_term(neg1(k1 + k2), conv_T({l1, l2}, {1, k1, k2}, ConvCase::EvenOdd, ctx));
    lhs -= signed_term(neg1(l1 + l2), conv_T({k1, k2}, {1, l1, l2}, ConvCase::EvenOdd, ctx));
    ApproxReal rhs(0L);
    for (int j = 1; j <= k2 - 1; ++j) rhs += signed_term(neg1(j), T({k1, k2 + 1 - j}, ctx) * T({l1, l2 + j}, ctx));
    for (int j = 1; j <= l2 - 1; ++j) rhs -= signed_term(neg1(j), T({l1, l2 + 1 - j}, ctx) * T({k1, k2 + j}, ctx));
    for (int j = 1; j <= k1; ++j)
        rhs -= signed_term(neg1(k2) * neg1(j), T({k1 + 1 - j}, ctx) * conv_T({l1, l2}, {j, k2}, ConvCase::EvenEven, ctx));
    for (int j = 1; j <= l1; ++j)
        rhs += signed_term(neg1(l2) * neg1(j), T({l1 + 1 - j}, ctx) * conv_T({k1, k2}, {j, l2}, ConvCase::EvenEven, ctx));
    return {lhs, rhs};
}

// ---------------------------------------------------------------------------
// Dualities for I_L, I_A, xi and psi.

/// I(k_{+(p-1)}; l) + (-1)^p I(k; l_{+(p-1)}) against sum_j (-1)^{j-1} V(k_{+(p-j)}) V(l_{+j}).
inline Sides dual_L(const Composition& k, const Composition& l, int p, Context& ctx = default_context()) {
    using namespace detail;
    ApproxReal lhs = int_LL(k.plus_last(p - 1), l, ctx) + signed_term(neg1(p), int_LL(k, l.plus_last(p - 1), ctx));
    ApproxReal rhs(0L);
    for (int j = 1; j <= p - 1; ++j) rhs += signed_term(neg1(j - 1), Z(k.plus_last(p - j), ctx) * Z(l.plus_last(j), ctx));
    return {lhs, rhs};
}

inline Sides dual_A(const Composition& k, const Composition& l, int p, Context& ctx = default_context()) {
    using namespace detail;
    ApproxReal lhs = int_AA(k.plus_last(p - 1), l, ctx) + signed_term(neg1(p), int_AA(k, l.plus_last(p - 1), ctx));
    ApproxReal rhs(0L);
    for (int j = 1; j <= p - 1; ++j) rhs += signed_term(neg1(j - 1), T(k.plus_last(p - j), ctx) * T(l.plus_last(j), ctx));
    return {lhs, rhs};
}

inline Sides xi_dual(int r, int s, int p, Context& ctx = default_context()) {
    using namespace detail;
    auto ones = [](int n) { return Composition::repeat(1, static_cast<std::size_t>(n)); };
    ApproxReal lhs = xi_value(ones(r - 1).appended(p), s + 1, ctx) + signed_term(neg1(p), xi_value(ones(s - 1).appended(p), r + 1, ctx));
    ApproxReal rhs(0L);
    for (int j = 0; j <= p - 2; ++j) rhs += signed_term(neg1(j), Z(ones(r - 1).appended(p - j), ctx) * Z(ones(j).appended(s + 1), ctx));
    return {lhs, rhs};
}

inline Sides psi_dual(int r, int s, int p, Context& ctx = default_context()) {
    using namespace detail;
    auto ones = [](int n) { return Composition::repeat(1, static_cast<std::size_t>(n)); };
    ApproxReal lhs = psi_value(ones(r - 1).appended(p), s + 1, ctx) + signed_term(neg1(p), psi_value(ones(s - 1).appended(p), r + 1, ctx));
    ApproxReal rhs(0L);
    for (int j = 0; j <= p - 2; ++j) rhs += signed_term(neg1(j), T(ones(r - 1).appended(p - j), ctx) * T(ones(j).appended(s + 1), ctx));
    return {lhs, rhs};
}

// ---------------------------------------------------------------------------
// Alternating values: moments of lambda_k(sigma x).

namespace detail {

/// lambda_k(sigma) at x = 1; sigma may be shorter than the full index (a prefix).
inline ApproxReal lam(const Composition& k, const std::vector<int>& sigma, Context& ctx) {
    if (k.empty()) return ApproxReal(1L);
    return zeta(k.unsigned_copy().with_signs(lambda_signs(sigma)), ctx);
}

inline std::vector<int> prefix(const std::vector<int>& v, long n) {
    return {v.begin(), v.begin() + std::max(0L, n)};
}

/// sigma^n for sigma = +-1.
inline int spow(int sigma, long n) { return sigma > 0 ? 1 : neg1(n); }

inline ApproxReal star_n(const Composition& k, const std::vector<int>& signs, long n) {
    return q(harmonic_sum<Rational>(HarmonicFamily::MhsStar, k.unsigned_copy().with_signs(signs), n));
}

inline void require_signs(const std::vector<int>& s, std::size_t n, const char* what) {
    if (s.size() != n) throw DomainError(std::string(what) + ": one sign per entry required");
    for (int v : s)
        if (v != 1 && v != -1) throw DomainError(std::string(what) + ": signs must be +1 or -1");
}

}  // namespace detail

/// int_0^1 x^{n-1} lambda_k(sigma_1 x, ..., sigma_r x) dx through the recurrence.
inline ApproxReal lambda_moment_recurrence(const Composition& k, const std::vector<int>& sigma, long n,
                                           Context& ctx = default_context()) {
    using namespace detail;
    require_nonempty(k, "lambda_moment");
    require_signs(sigma, k.depth(), "lambda_moment");
    std::vector<ApproxReal> prev;
    for (long m = 1; m <= n; ++m) prev.push_back(q(Rational(1, m)));
    for (long i = 1; i <= static_cast<long>(k.depth()); ++i) {
        const int ki = K(k, i);
        const int si = sigma[static_cast<std::size_t>(i - 1)];
        const auto sig = prefix(sigma, i);
        std::vector<ApproxReal> cur;
        ApproxReal acc(0L);
        for (long m = 1; m <= n; ++m) {
            acc += signed_term(spow(si, m), prev[static_cast<std::size_t>(m - 1)]);
            ApproxReal v(0L);
            for (int j = 1; j <= ki - 1; ++j) v += signed_term(neg1(j - 1), lam(with_last(head(k, i - 1), ki + 1 - j), sig, ctx) * inv_pow(m, j));
            if (si < 0 && (m % 2)) v += signed_term(neg1(ki), lam(with_last(head(k, i - 1), 1), sig, ctx) * Rational(-2) * inv_pow(m, ki));
            v -= signed_term(neg1(ki) * spow(si, m), acc * inv_pow(m, ki));
            cur.push_back(v);
        }
        prev = std::move(cur);
    }
    return prev.back();
}

/// The explicit expansion of the lambda moment. The recurrence gives n^j in the
/// first sum and (-1)^{|k_r^l| - l} in the first l-sum; `printed` keeps the
/// stated n^{j-1} and (-1)^{|k_r^l|} instead.
inline ApproxReal lambda_moment_closed(const Composition& k, const std::vector<int>& sigma, long n, bool printed = false,
                                       Context& ctx = default_context()) {
    using namespace detail;
    require_nonempty(k, "lambda_moment");
    require_signs(sigma, k.depth(), "lambda_moment");
    const long r = static_cast<long>(k.depth());
    const int kr = K(k, r);
    auto sg = [&](long i) { return sigma[static_cast<std::size_t>(i - 1)]; };  // sigma_i, 1-based
    // (sigma_r sigma_{r-1})^l = (sigma_{r-l+1} sigma_{r-l}, ..., sigma_r sigma_{r-1}).
    auto pairs = [&](long l) {
        std::vector<int> out;
        for (long i = r - l + 1; i <= r; ++i) out.push_back(sg(i) * sg(i - 1));
        return out;
    };
    const int srn = spow(sg(r), n);
    const Rational top = inv_pow(n, kr);
    ApproxReal sum(0L);
    for (int j = 1; j <= kr - 1; ++j)
        sum += signed_term(neg1(j - 1), lam(with_last(head(k, r - 1), kr + 1 - j), sigma, ctx) * inv_pow(n, printed ? j - 1 : j));
    if (sg(r) < 0) sum += signed_term(neg1(kr), lam(with_last(head(k, r - 1), 1), sigma, ctx) * Rational(srn - 1) * top);
    for (long l = 1; l <= r - 1; ++l) {
        std::vector<int> signs{sg(r - l + 1)};
        for (int v : pairs(l - 1)) signs.push_back(v);
        for (int j = 1; j <= K(k, r - l) - 1; ++j) {
            ApproxReal t = star_n(cat(one(j), sl(k, r - 1, l - 1)), signs, n) *
                           lam(with_last(head(k, r - l - 1), K(k, r - l) + 1 - j), prefix(sigma, r - l), ctx);
            sum -= signed_term(srn * neg1(W(k, r, l) - (printed ? 0 : l)) * neg1(j), t * top);
        }
    }
    for (long l = 1; l <= r - 1; ++l) {
        if (sg(r - l) > 0) continue;
        std::vector<int> a{sg(r - l + 1)};
        for (int v : pairs(l - 1)) a.push_back(v);
        const Composition c = sl(k, r - 1, l);
        ApproxReal t = lam(with_last(head(k, r - l - 1), 1), prefix(sigma, r - l), ctx) * (star_n(c, a, n) - star_n(c, pairs(l), n));
        sum -= signed_term(srn * neg1(W(k, r, l + 1) - l), t * top);
    }
    std::vector<int> last{sg(1)};
    for (int v : pairs(r - 1)) last.push_back(v);
    sum += signed_term(neg1(k.weight() - r) * srn, star_n(cat(one(1), head(k, r - 1)), last, n) * top);
    return sum;
}

inline ApproxReal lambda_moment_oracle(const Composition& k, const std::vector<int>& sigma, long n,
                                       Context& ctx = default_context()) {
    detail::require_nonempty(k, "lambda_moment");
    detail::require_signs(sigma, k.depth(), "lambda_moment");
    return termwise_integral(plain_chain(k.unsigned_copy().with_signs(lambda_signs(sigma)), Link::Strict), n - 1, ctx);
}

/// Depth one: int_0^1 x^{n-1} lambda_k(sigma x) dx.
inline ApproxReal lambda_moment_depth1(int k, int sigma, long n, Context& ctx = default_context()) {
    using namespace detail;
    ApproxReal sum(0L);
    const int sn = spow(sigma, n);
    if (sigma < 0) sum += signed_term(neg1(k), lam({1}, {sigma}, ctx) * Rational(sn - 1) * inv_pow(n, k));
    sum -= signed_term(neg1(k) * sn, star_n({1}, {sigma}, n) * inv_pow(n, k));
    for (int j = 1; j <= k - 1; ++j) sum -= signed_term(neg1(j), lam({k + 1 - j}, {sigma}, ctx) * inv_pow(n, j));
    return sum;
}

/// Depth two. The sign of the second group is (-1)^{k_2}; the stated "(-1)^k"
/// is resolved that way by the recurrence (see `sign_exponent`).
inline ApproxReal lambda_moment_depth2(int k1, int k2, int s1, int s2, long n, long sign_exponent = -1,
                                       Context& ctx = default_context()) {
    using namespace detail;
    const long e = sign_exponent < 0 ? k2 : sign_exponent;
    const int sn = spow(s2, n);
    const Rational top = inv_pow(n, k2);
    ApproxReal sum(0L);
    for (int j = 1; j <= k2 - 1; ++j) sum += signed_term(neg1(j - 1), lam({k1, k2 + 1 - j}, {s1, s2}, ctx) * inv_pow(n, j));
    for (int j = 1; j <= k1 - 1; ++j)
        sum += signed_term(neg1(e) * sn * neg1(j), lam({k1 + 1 - j}, {s1}, ctx) * star_n({j}, {s2}, n) * top);
    if (s2 < 0) sum += signed_term(neg1(k2), lam({k1, 1}, {s1, s2}, ctx) * Rational(sn - 1) * top);
    if (s1 < 0)
        sum += signed_term(neg1(k1 + k2) * sn, lam({1}, {s1}, ctx) * (star_n({k1}, {s2}, n) - star_n({k1}, {s2 * s1}, n)) * top);
    sum += signed_term(neg1(k1 + k2) * sn, star_n({1, k1}, {s1, s2 * s1}, n) * top);
    return sum;
}

namespace detail {

/// Li_k(x_1, ..., x_r) and Li*_k at signs.
inline ApproxReal li(const Composition& k, std::vector<int> x, Context& ctx) { return li_signs(k, x, false, ctx); }
inline ApproxReal lis(const Composition& k, std::vector<int> x, Context& ctx) { return li_signs(k, x, true, ctx); }

}  // namespace detail

/// Depth-one alternating relation from int lambda_k(sigma x) lambda_l(eps x) / x.
inline Sides alt_depth1(int k, int l, int sigma, int eps, Context& ctx = default_context()) {
    using namespace detail;
    ApproxReal lhs = signed_term(neg1(k), lis({1, k + l}, {sigma, sigma * eps}, ctx)) -
                     signed_term(neg1(l), lis({1, k + l}, {eps, sigma * eps}, ctx));
    ApproxReal rhs(0L);
    for (int j = 1; j <= k - 1; ++j) rhs += signed_term(neg1(j - 1), lam({k + 1 - j}, {sigma}, ctx) * lam({l + j}, {eps}, ctx));
    for (int j = 1; j <= l - 1; ++j) rhs -= signed_term(neg1(j - 1), lam({l + 1 - j}, {eps}, ctx) * lam({k + j}, {sigma}, ctx));
    if (eps < 0) rhs += signed_term(neg1(l), lam({1}, {eps}, ctx) * (lam({k + l}, {sigma}, ctx) - lam({k + l}, {sigma * eps}, ctx)));
    if (sigma < 0) rhs -= signed_term(neg1(k), lam({1}, {sigma}, ctx) * (lam({k + l}, {eps}, ctx) - lam({k + l}, {sigma * eps}, ctx)));
    return {lhs, rhs};
}

/// The sigma_2 = -1 correction carries lambda_{k_2 + l}; the stated index k_2
/// disagrees with the term-wise value of the defining integral.
inline Sides alt_c7(int k1, int k2, int l, int s1, int s2, int eps, Context& ctx = default_context()) {
    using namespace detail;
    ApproxReal lhs(0L);
    for (int j = 1; j <= l - 1; ++j) lhs += signed_term(neg1(j - 1), lam({l + 1 - j}, {eps}, ctx) * li({k1, k2 + j}, {s1 * s2, s2}, ctx));
    lhs -= signed_term(neg1(l), alt_ky(Composition({k1, k2}, {s1 * s2, s2}), Composition({1, l}, {eps, eps}), ctx));
    if (eps < 0)
        lhs -= signed_term(neg1(l), lam({1}, {eps}, ctx) * (li({k1, k2 + l}, {s1 * s2, s2}, ctx) - li({k1, k2 + l}, {s1 * s2, s2 * eps}, ctx)));
    ApproxReal rhs(0L);
    for (int j = 1; j <= k2 - 1; ++j) rhs += signed_term(neg1(j - 1), lam({k1, k2 + 1 - j}, {s1, s2}, ctx) * lam({l + j}, {eps}, ctx));
    for (int j = 1; j <= k1 - 1; ++j)
        rhs -= signed_term(neg1(k2) * neg1(j - 1), lam({k1 + 1 - j}, {s1}, ctx) * lis({j, k2 + l}, {s2, eps * s2}, ctx));
    if (s2 < 0) rhs -= signed_term(neg1(k2), lam({k1, 1}, {s1, s2}, ctx) * (lam({k2 + l}, {eps}, ctx) - lam({k2 + l}, {eps * s2}, ctx)));
    rhs += signed_term(neg1(k1 + k2), lis({1, k1, k2 + l}, {s1, s2 * s1, s2 * eps}, ctx));
    if (s1 < 0)
        rhs += signed_term(neg1(k1 + k2), lam({1}, {s1}, ctx) * (lis({k1, k2 + l}, {s2, eps * s2}, ctx) - lis({k1, k2 + l}, {s2 * s1, eps * s2}, ctx)));
    return {lhs, rhs};
}

inline Sides alt_c8(int k1, int k2, int l, int s1, int s2, int eps, Context& ctx = default_context()) {
    using namespace detail;
    ApproxReal lhs = signed_term(neg1(l), lis({k1, 1, k2 + l}, {s1 * s2, eps, s2 * eps}, ctx));
    lhs += signed_term(neg1(l), lis({1, k1, k2 + l}, {eps, s1 * s2, s2 * eps}, ctx));
    lhs += signed_term(neg1(k1 + k2), lis({1, k1, k2 + l}, {s1, s2 * s1, s2 * eps}, ctx));
    ApproxReal rhs(0L);
    for (int j = 1; j <= k2 - 1; ++j) rhs += signed_term(neg1(j), lam({k1, k2 + 1 - j}, {s1, s2}, ctx) * lam({l + j}, {eps}, ctx));
    for (int j = 1; j <= k1 - 1; ++j)
        rhs -= signed_term(neg1(k2) * neg1(j), lam({k1 + 1 - j}, {s1}, ctx) * lis({j, k2 + l}, {s2, eps * s2}, ctx));
    for (int j = 1; j <= l - 1; ++j) rhs -= signed_term(neg1(j), lam({l + 1 - j}, {eps}, ctx) * li({k1, k2 + j}, {s1 * s2, s2}, ctx));
    if (s2 < 0) rhs += signed_term(neg1(k2), lam({k1, 1}, {s1, s2}, ctx) * (lam({k2 + l}, {eps}, ctx) - lam({k2 + l}, {eps * s2}, ctx)));
    if (s1 < 0)
        rhs -= signed_term(neg1(k1 + k2), lam({1}, {s1}, ctx) * (lis({k1, k2 + l}, {s2, eps * s2}, ctx) - lis({k1, k2 + l}, {s2 * s1, eps * s2}, ctx)));
    if (eps < 0)
        rhs -= signed_term(neg1(l), lam({1}, {eps}, ctx) * (li({k1, k2 + l}, {s1 * s2, s2}, ctx) - li({k1, k2 + l}, {s1 * s2, s2 * eps}, ctx)));
    rhs += signed_term(neg1(l), lis({k1 + 1, k2 + l}, {s1 * s2 * eps, s2 * eps}, ctx));
    rhs += signed_term(neg1(l), lis({1, k1 + k2 + l}, {eps, s1 * eps}, ctx));
    return {lhs, rhs};
}

/// zeta*(2-, 1-, 4-) + 2 zeta*(1-, 2-, 4-) against its closed form in Li_4(1/2), pi, zeta(3,5,7), log 2.
inline Sides alt_num(Context& ctx = default_context()) {
    ApproxReal lhs = zeta_star(Composition({2, 1, 4}, {-1, -1, -1}), ctx) + zeta_star(Composition({1, 2, 4}, {-1, -1, -1}), ctx) * Rational(2);
    const ApproxReal li4 = li_single({4}, from_rational(1, 2), ctx);
    const ApproxReal pi(const_pi()), l2(const_log2());
    const ApproxReal z3(riemann_zeta(3)), z5(riemann_zeta(5)), z7(riemann_zeta(7));
    ApproxReal rhs = li4 * z3 * Rational(3);
    rhs -= pow(pi, 4) * z3 * Rational(7, 128);
    rhs += pow(pi, 2) * z5 * Rational(61, 192);
    rhs -= z7 * Rational(105, 128);
    rhs += z3 * pow(l2, 4) * Rational(1, 8);
    rhs -= pow(pi, 2) * z3 * pow(l2, 2) * Rational(1, 8);
    rhs += z3 * z3 * l2 * Rational(63, 16);
    rhs -= pow(pi, 6) * l2 * Rational(61, 10080);
    return {lhs, rhs};
}

// ---------------------------------------------------------------------------
// The convoluted poset relation for k = (1, 1), l = (2, 1).

/// Left side as a combination of lambda values at sigma' = (sigma_1 sigma_2, sigma_2);
/// right side as the expansion of zeta((1, 1; sigma) * (2, 1)*).
inline Sides poset522(int s1, int s2, Context& ctx = default_context()) {
    using detail::lam;
    const int a = s1 * s2, b = s2;
    ApproxReal lhs = (lam({1, 1, 3}, {a, b, 1}, ctx) + lam({1, 1, 3}, {a, 1, b}, ctx) + lam({1, 1, 3}, {1, a, b}, ctx)) * Rational(2);
    lhs += lam({1, 2, 2}, {a, 1, b}, ctx) + lam({1, 2, 2}, {1, a, b}, ctx) + lam({2, 1, 2}, {1, a, b}, ctx);
    ApproxReal rhs = zeta(Composition({2, 1, 2}, {1, s1, s2}), ctx) + zeta(Composition({1, 2, 2}, {s1, 1, s2}), ctx) +
                     zeta(Composition({3, 2}, {s1, s2}), ctx) + zeta(Composition({1, 4}, {s1, s2}), ctx);
    return {lhs, rhs};
}

/// The two specialisations as stated: (1, 1) and (1, -1).
inline Sides poset522_special(bool alternating, Context& ctx = default_context()) {
    auto z = [&](std::vector<int> k, std::vector<int> s) { return zeta(Composition(std::move(k), std::move(s)), ctx); };
    if (!alternating) {
        ApproxReal lhs = z({1, 1, 3}, {1, 1, 1}) * Rational(6) + z({1, 2, 2}, {1, 1, 1}) * Rational(2) + z({2, 1, 2}, {1, 1, 1});
        ApproxReal rhs = z({1, 2, 2}, {1, 1, 1}) + z({2, 1, 2}, {1, 1, 1}) + z({3, 2}, {1, 1}) + z({1, 4}, {1, 1});
        return {lhs, rhs};
    }
    ApproxReal lhs = (z({1, 1, 3}, {1, -1, 1}) + z({1, 1, 3}, {-1, -1, -1}) + z({1, 1, 3}, {-1, 1, -1})) * Rational(2);
    lhs += z({1, 2, 2}, {-1, -1, -1}) + z({1, 2, 2}, {-1, 1, -1}) + z({2, 1, 2}, {-1, 1, -1});
    ApproxReal rhs = z({2, 1, 2}, {1, 1, -1}) + z({1, 2, 2}, {1, 1, -1}) + z({3, 2}, {1, -1}) + z({1, 4}, {1, -1});
    return {lhs, rhs};
}

/// The zig-zag poset integral times prod sigma' against zeta((k; sigma) * l*).
inline Sides ky_poset_relation(const Composition& k, const std::vector<int>& sigma, const Composition& l,
                               Context& ctx = default_context()) {
    ApproxReal integral = evaluate_poset(ky_poset(k, sigma, l), ctx);
    int prod = 1;
    for (int s : suffix_products(sigma)) prod *= s;
    std::vector<int> signs = sigma.empty() ? std::vector<int>(k.depth(), 1) : sigma;
    return {detail::signed_term(prod, integral), alt_ky(k.unsigned_copy().with_signs(signs), l, ctx)};
}

// ---------------------------------------------------------------------------
// t and L functions.

/// L(k) = L(k; 1) = 2^{-|k|} zeta(k).
inline ApproxReal L_value(const Composition& k, Context& ctx = default_context()) {
    if (k.empty()) return ApproxReal(1L);
    return zeta(k, ctx) * Rational(1, Integer(1) << k.weight());
}

/// int_0^1 L(k, 1; x) / x^2 dx = -2^{-r} sum_eps zeta(k, 1; eps, -1).
inline ApproxReal l_one_over_x2(const Composition& k, Context& ctx = default_context()) {
    const std::size_t r = k.depth();
    ApproxReal sum(0L);
    for (std::size_t v = 0; v < (std::size_t{1} << r); ++v) {
        std::vector<int> eps(r);
        for (std::size_t j = 0; j < r; ++j) eps[j] = ((v >> j) & 1u) ? -1 : 1;
        eps.push_back(-1);
        sum += zeta(k.unsigned_copy().appended(1).with_signs(eps), ctx);
    }
    return -(sum * Rational(1, Integer(1) << r));
}

/// int_0^1 t(k, 1; x) / x^2 dx = 2^{-r} sum_eps (prod eps) zeta(k, 1; eps, -1).
/// The integrand is positive; the sign agrees with the depth-one form below.
inline ApproxReal t_one_over_x2(const Composition& k, Context& ctx = default_context()) {
    const std::size_t r = k.depth();
    ApproxReal sum(0L);
    for (std::size_t v = 0; v < (std::size_t{1} << r); ++v) {
        std::vector<int> eps(r);
        int prod = 1;
        for (std::size_t j = 0; j < r; ++j) {
            eps[j] = ((v >> j) & 1u) ? -1 : 1;
            prod *= eps[j];
        }
        eps.push_back(-1);
        sum += detail::signed_term(prod, zeta(k.unsigned_copy().appended(1).with_signs(eps), ctx));
    }
    return sum * Rational(1, Integer(1) << r);
}

/// Depth-one forms: -1/2 (zeta(k, 1-) + zeta(k-, 1-)) and 1/2 (zeta(k, 1-) - zeta(k-, 1-)).
inline Sides l_one_over_x2_depth1(int k, Context& ctx = default_context()) {
    ApproxReal a = zeta(Composition({k, 1}, {1, -1}), ctx), b = zeta(Composition({k, 1}, {-1, -1}), ctx);
    return {(a + b) * Rational(-1, 2), (a - b) * Rational(1, 2)};
}

/// int_0^1 L(k; x) x^a dx and int_0^1 t(k; x) x^a dx by term-wise integration.
inline ApproxReal l_moment_oracle_raw(const Composition& k, long a, Context& ctx = default_context()) {
    return termwise_integral(uniform_parity_chain(k.unsigned_copy(), Parity::Even, Link::Strict), a, ctx);
}
inline ApproxReal t_moment_oracle_raw(const Composition& k, long a, Context& ctx = default_context()) {
    return termwise_integral(uniform_parity_chain(k.unsigned_copy(), Parity::Odd, Link::Strict), a, ctx);
}

/// int_0^1 t(k, 1; x) dx for a single entry k: k = 1 gives log 2 - zeta(2)/4.
inline ApproxReal t_one_integral_depth1(int k, Context& ctx = default_context()) {
    using namespace detail;
    if (k == 1) return ApproxReal(const_log2()) - zeta({2}, ctx) * Rational(1, 4);
    ApproxReal v = (zeta(Composition({k, 1}, {-1, -1}), ctx) - zeta(Composition({k, 1}, {1, -1}), ctx)) * Rational(1, 2);
    v -= signed_term(neg1(k), ApproxReal(const_log2()));
    for (int j = 2; j <= k; ++j)
        v += signed_term(neg1(k - j), (zeta({j}, ctx) - zeta(Composition({j}, {-1}), ctx)) * Rational(1, 2));
    return v;
}

/// int_0^1 L(k, 1; x) dx for a single entry k >= 2.
inline ApproxReal l_one_integral_depth1(int k, Context& ctx = default_context()) {
    using namespace detail;
    if (k < 2) throw DomainError("l_one_integral: k must be at least 2");
    ApproxReal v = (zeta(Composition({k, 1}, {-1, -1}), ctx) + zeta(Composition({k, 1}, {1, -1}), ctx)) * Rational(1, 2);
    v -= ApproxReal(neg1(k));
    v += signed_term(neg1(k), ApproxReal(const_log2()));
    for (int j = 2; j <= k; ++j) v += signed_term(neg1(k - j), zeta({j}, ctx) * Rational(1, Integer(1) << j));
    return v;
}

/// int_0^1 t(k, 1; x) dx: depth-one formula where available, series otherwise.
inline ApproxReal t_one_integral(const Composition& k, Context& ctx = default_context()) {
    if (k.empty()) return ApproxReal(const_log2());
    if (k.depth() == 1) return t_one_integral_depth1(k.last(), ctx);
    return t_moment_oracle_raw(k.unsigned_copy().appended(1), 0, ctx);
}

/// int_0^1 x^{2n-2} L(k; x) dx by the explicit expansion.
inline ApproxReal l_moment_closed(const Composition& k, long n, Context& ctx = default_context()) {
    using namespace detail;
    require_nonempty(k, "l_moment");
    const long r = static_cast<long>(k.depth());
    const int kr = K(k, r);
    const long d = 2 * n - 1;
    const Rational top = inv_pow(d, kr);
    auto ts = [&](const Composition& c) { return hs(HarmonicFamily::tStar, c, n); };
    ApproxReal sum(0L);
    for (int j = 1; j <= kr - 1; ++j) sum += signed_term(neg1(j - 1), L_value(with_last(head(k, r - 1), kr + 1 - j), ctx) * inv_pow(d, j));
    sum += signed_term(neg1(k.weight() - r), ts(cat(one(1), head(k, r - 1))) * top);
    for (long l = 1; l <= r - 1; ++l)
        for (int j = 1; j <= K(k, r - l) - 1; ++j)
            sum += signed_term(neg1(W(k, r, l) - l) * neg1(j - 1),
                               L_value(with_last(head(k, r - l - 1), K(k, r - l) + 1 - j), ctx) * ts(cat(one(j), sl(k, r - 1, l - 1))) * top);
    for (long l = 0; l <= r - 1; ++l)
        sum -= signed_term(neg1(W(k, r, l + 1) - l - 1), l_one_over_x2(head(k, r - l - 1), ctx) * ts(sl(k, r - 1, l)) * top);
    return sum;
}

inline ApproxReal l_moment_recurrence(const Composition& k, long n, Context& ctx = default_context()) {
    using namespace detail;
    require_nonempty(k, "l_moment");
    std::vector<ApproxReal> prev;
    for (long m = 1; m <= n; ++m) prev.push_back(q(Rational(1, 2 * m - 1)));
    for (long i = 1; i <= static_cast<long>(k.depth()); ++i) {
        const int ki = K(k, i);
        const Composition prefix = head(k, i - 1);
        const ApproxReal sub = l_one_over_x2(prefix, ctx);
        std::vector<ApproxReal> cur;
        ApproxReal acc(0L);
        for (long m = 1; m <= n; ++m) {
            acc += prev[static_cast<std::size_t>(m - 1)];
            ApproxReal v(0L);
            for (int j = 1; j <= ki - 1; ++j) v += signed_term(neg1(j - 1), L_value(with_last(prefix, ki + 1 - j), ctx) * inv_pow(2 * m - 1, j));
            v += signed_term(neg1(ki - 1), (acc - sub) * inv_pow(2 * m - 1, ki));
            cur.push_back(v);
        }
        prev = std::move(cur);
    }
    return prev.back();
}

inline ApproxReal l_moment_oracle(const Composition& k, long n, Context& ctx = default_context()) {
    detail::require_nonempty(k, "l_moment");
    return l_moment_oracle_raw(k, 2 * n - 2, ctx);
}

/// Depth two written out, with int L(k_1, 1; x)/x^2 and log 2 t*_n(k_1).
inline ApproxReal l_moment_depth2(int k1, int k2, long n, Context& ctx = default_context()) {
    using namespace detail;
    const long d = 2 * n - 1;
    const Rational top = inv_pow(d, k2);
    ApproxReal sum(0L);
    for (int j = 1; j <= k2 - 1; ++j) sum += signed_term(neg1(j - 1), L_value({k1, k2 + 1 - j}, ctx) * inv_pow(d, j));
    sum += signed_term(neg1(k2), l_one_over_x2({k1}, ctx) * top);
    for (int j = 1; j <= k1 - 1; ++j)
        sum -= signed_term(neg1(k2) * neg1(j - 1), L_value({k1 + 1 - j}, ctx) * hs(HarmonicFamily::tStar, {j}, n) * top);
    sum -= signed_term(neg1(k1 + k2), ApproxReal(const_log2()) * hs(HarmonicFamily::tStar, {k1}, n) * top);
    sum += signed_term(neg1(k1 + k2), hs(HarmonicFamily::tStar, {1, k1}, n) * top);
    return sum;
}

/// int_0^1 x^{2n-2} t(k; x) dx by the explicit expansion.
inline ApproxReal t_moment_closed(const Composition& k, long n, Context& ctx = default_context()) {
    using namespace detail;
    require_nonempty(k, "t_moment");
    const long r = static_cast<long>(k.depth());
    const int kr = K(k, r);
    const long d = 2 * n - 1;
    const Rational top = inv_pow(d, kr);
    auto hat = [&](const Composition& c) { return hs(HarmonicFamily::HatTStar, c, n); };
    ApproxReal sum(0L);
    for (int j = 1; j <= kr - 1; ++j) sum += signed_term(neg1(j - 1), t_value(with_last(head(k, r - 1), kr + 1 - j), ctx) * inv_pow(d, j));
    sum += signed_term(neg1(k.weight() - r), hs(HarmonicFamily::sStar, cat(one(1), head(k, r - 1)), n) * top);
    for (long l = 1; l <= r - 1; ++l)
        for (int j = 1; j <= K(k, r - l) - 1; ++j)
            sum += signed_term(neg1(W(k, r, l) - l) * neg1(j - 1),
                               t_value(with_last(head(k, r - l - 1), K(k, r - l) + 1 - j), ctx) * hat(cat(one(j), sl(k, r - 1, l - 1))) * top);
    for (long l = 0; l <= r - 1; ++l)
        sum += signed_term(neg1(W(k, r, l + 1) - l - 1), t_one_integral(head(k, r - l - 1), ctx) * hat(sl(k, r - 1, l)) * top);
    return sum;
}

inline ApproxReal t_moment_recurrence(const Composition& k, long n, Context& ctx = default_context()) {
    using namespace detail;
    require_nonempty(k, "t_moment");
    // P_0[m] = int x^{2m-2} / x dx = 1 / (2m - 2), used for m >= 2 only.
    std::vector<ApproxReal> prev;
    for (long m = 1; m <= n; ++m) prev.push_back(m == 1 ? ApproxReal(0L) : q(Rational(1, 2 * m - 2)));
    for (long i = 1; i <= static_cast<long>(k.depth()); ++i) {
        const int ki = K(k, i);
        const Composition prefix = head(k, i - 1);
        const ApproxReal sub = t_one_integral(prefix, ctx);
        std::vector<ApproxReal> cur;
        ApproxReal acc(0L);
        for (long m = 1; m <= n; ++m) {
            if (m >= 2) acc += prev[static_cast<std::size_t>(m - 1)];
            ApproxReal v(0L);
            for (int j = 1; j <= ki - 1; ++j) v += signed_term(neg1(j - 1), t_value(with_last(prefix, ki + 1 - j), ctx) * inv_pow(2 * m - 1, j));
            v += signed_term(neg1(ki - 1), (sub + acc) * inv_pow(2 * m - 1, ki));
            cur.push_back(v);
        }
        prev = std::move(cur);
    }
    return prev.back();
}

inline ApproxReal t_moment_oracle(const Composition& k, long n, Context& ctx = default_context()) {
    detail::require_nonempty(k, "t_moment");
    return t_moment_oracle_raw(k, 2 * n - 2, ctx);
}

/// Coefficients I_r of 1 - sum_r I_r u^r = exp(sum_n zeta(n bar) u^n / n), exactly.
inline std::vector<ZetaPolynomial> l_ones_over_x2_symbolic(std::size_t max_r) {
    std::vector<ZetaPolynomial> s(max_r + 1);
    for (std::size_t n = 1; n <= max_r; ++n) s[n] = alternating_zeta_symbol(static_cast<int>(n)) * Rational(1, static_cast<long>(n));
    std::vector<ZetaPolynomial> e = exp_series(s, max_r);
    std::vector<ZetaPolynomial> out(max_r + 1);
    for (std::size_t r = 1; r <= max_r; ++r) out[r] = e[r] * Rational(-1);
    return out;
}

/// The stated depth 1..3 values of int_0^1 L({1}_r; x) / x^2 dx.
inline ZetaPolynomial l_ones_over_x2_display(int r) {
    const ZetaPolynomial l2 = ZetaPolynomial::log2(), z2 = ZetaPolynomial::zeta(2), z3 = ZetaPolynomial::zeta(3);
    switch (r) {
        case 1: return l2;
        case 2: return z2 * Rational(1, 4) + l2 * l2 * Rational(-1, 2);
        case 3: return z3 * Rational(1, 4) + l2 * l2 * l2 * Rational(1, 6) + z2 * l2 * Rational(-1, 4);
        default: throw DomainError("l_ones_over_x2_display: only r = 1, 2, 3 are displayed");
    }
}

inline ApproxReal l_ones_over_x2_oracle(int r, Context& ctx = default_context()) {
    return l_moment_oracle_raw(Composition::repeat(1, static_cast<std::size_t>(r)), -2, ctx);
}

/// The closing relation between L, T, t* values and a zeta_{n-1}(k_1) T_n(1) series.
inline Sides t_final(int k1, int k2, int l, Context& ctx = default_context()) {
    using namespace detail;
    ApproxReal lhs(0L);
    for (int j = 1; j <= k2 - 1; ++j) lhs += signed_term(neg1(j - 1), L_value({k1, k2 + 1 - j}, ctx) * T({l + j}, ctx));
    lhs += signed_term(neg1(k2), T({k2 + l}, ctx) * l_one_over_x2({k1}, ctx));
    for (int j = 1; j <= k1 - 1; ++j)
        lhs -= signed_term(neg1(k2) * neg1(j - 1), L_value({k1 + 1 - j}, ctx) * t_star_value({j, k2 + l}, ctx) * Rational(2));
    lhs -= signed_term(neg1(k1 + k2), ApproxReal(const_log2()) * t_star_value({k1, k2 + l}, ctx) * Rational(2));
    lhs += signed_term(neg1(k1 + k2), t_star_value({1, k1, k2 + l}, ctx) * Rational(2));
    ApproxReal rhs(0L);
    for (int j = 1; j <= l - 1; ++j)
        rhs += signed_term(neg1(j - 1), T({l + 1 - j}, ctx) * zeta({k1, k2 + j}, ctx) * Rational(1, Integer(1) << (k1 + k2 + j)));
    ApproxReal ser = nsum(ctx, {factor(HarmonicFamily::Mhs, {k1}, -1), factor(HarmonicFamily::T, {1})}, {1, 0}, k2 + l);
    rhs -= signed_term(neg1(l), ser * Rational(1, Integer(1) << (k1 + k2 + l)));
    return {lhs, rhs};
}

}  // namespace mzv

#endif  // MZV_CLOSED_FORMS_HPP
