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

// Named special values and polylogarithm-type functions.
//
// Every family is a nested sum over 0 < m_1 R ... R m_r with per-index parity
// and sign, optionally weighted by x^{m_r}. The last index becomes the outer
// series variable; the others form a ChainTable evaluated at m_r - 1 (strict)
// or m_r (weak).

#ifndef MZV_VALUES_HPP
#define MZV_VALUES_HPP

#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mzv/approx_real.hpp"
#include "mzv/composition.hpp"
#include "mzv/nested_sum.hpp"
#include "mzv/rational.hpp"
#include "mzv/real.hpp"
#include "mzv/series.hpp"

namespace mzv {

/// Evaluation settings plus a memo table of series values keyed by their
/// canonical description. Safe to share between threads.
class Context {
public:
    Context() = default;
    explicit Context(SeriesOptions o) : opts(o) {}

    SeriesOptions opts{};

    ApproxReal eval(const SeriesSpec& spec) {
        const std::string key = spec_key(spec);
        {
            std::lock_guard<std::mutex> lock(mu_);
            if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        }
        PrecisionGuard guard(opts.bits);
        SeriesResult r = sum_series(spec, opts);
        std::lock_guard<std::mutex> lock(mu_);
        ++evaluations_;
        if (!r.converged) ++unconverged_;
        return cache_.emplace(key, r.value).first->second;
    }

    std::size_t evaluations() const { return evaluations_; }
    std::size_t unconverged() const { return unconverged_; }

    static std::string spec_key(const SeriesSpec& s) {
        std::ostringstream os;
        os << s.n_start << '|' << s.sign << ':' << s.sign_index.a << ',' << s.sign_index.b << '|';
        for (const auto& d : s.denominators) os << d.base.a << ',' << d.base.b << '^' << d.power << ';';
        os << '|';
        if (s.x) os << s.x->str(40) << '@' << s.x_index.a << ',' << s.x_index.b;
        os << '|';
        for (const auto& f : s.inner) os << f.chain.key() << '@' << f.bound.a << ',' << f.bound.b << ';';
        os << '|' << s.coefficient.str(40);
        return os.str();
    }

private:
    std::mutex mu_;
    std::map<std::string, ApproxReal> cache_;
    std::size_t evaluations_ = 0;
    std::size_t unconverged_ = 0;
};

inline Context& default_context() {
    static Context ctx;
    return ctx;
}

/// Index map m(n) for an outer slot of the given parity.
inline Affine outer_map(Parity p) {
    switch (p) {
        case Parity::Odd: return {2, -1};
        case Parity::Even: return {2, 0};
        case Parity::Any: break;
    }
    return {1, 0};
}

/// Series for sum over the chain, times x^{m_r} when x is set.
inline SeriesSpec chain_series(const Chain& full, std::optional<Real> x = std::nullopt) {
    if (full.slots.empty()) throw std::invalid_argument("chain_series: empty chain");
    const Slot& last = full.slots.back();
    SeriesSpec s;
    const Affine m = outer_map(last.parity);
    s.n_start = 1;
    while (m(s.n_start) < last.min_index) ++s.n_start;
    s.denominators.push_back({m, last.exponent});
    s.sign = last.sign;
    s.sign_index = m;
    if (x) {
        s.x = *x;
        s.x_index = m;
    }
    if (full.slots.size() > 1) {
        Chain inner;
        inner.slots.assign(full.slots.begin(), full.slots.end() - 1);
        s.inner.push_back({inner, {m.a, m.b + (last.link == Link::Strict ? -1 : 0)}});
    }
    s.coefficient = Real(full.coefficient);
    return s;
}

/// Chain with explicit per-slot parities and signs.
inline Chain mixed_chain(const Composition& k, const std::vector<Parity>& parity, Link link, long coefficient) {
    Chain c;
    for (std::size_t i = 0; i < k.depth(); ++i)
        c.slots.push_back({k.part(i), k.sign(i), i < parity.size() ? parity[i] : Parity::Any, link, 1});
    c.coefficient = coefficient;
    return c;
}

inline std::vector<Parity> interleaved_parities(std::size_t r, Parity first) {
    std::vector<Parity> p;
    Parity cur = first;
    for (std::size_t i = 0; i < r; ++i) {
        p.push_back(cur);
        cur = cur == Parity::Odd ? Parity::Even : Parity::Odd;
    }
    return p;
}

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

/// Folds x = +-1 into the last sign; returns the residual |x| < 1 parameter.
inline std::optional<Real> fold_x(Chain& c, const Real& x) {
    if (abs(x) > Real(1L)) throw DomainError("argument outside [-1, 1]");
    if (x == Real(1L)) return std::nullopt;
    if (x == Real(-1L)) {
        c.slots.back().sign = -c.slots.back().sign;
        return std::nullopt;
    }
    return x;
}

inline ApproxReal eval_chain(Context& ctx, const Chain& c, std::optional<Real> x, const std::string& name) {
    SeriesSpec s = chain_series(c, x);
    require(s.convergent(), name + ": divergent (inadmissible index)");
    return ctx.eval(s);
}

}  // namespace detail

/// zeta(k; eps): barred entries alternate. Requires (k_r, eps_r) != (1, +1).
inline ApproxReal zeta(const Composition& k, Context& ctx = default_context()) {
    if (k.empty()) return ApproxReal(1L);
    detail::require(is_admissible(k, Admissibility::SeriesAlternating), "zeta(" + k.str() + "): inadmissible");
    return detail::eval_chain(ctx, plain_chain(k, Link::Strict), std::nullopt, "zeta");
}

inline ApproxReal zeta_star(const Composition& k, Context& ctx = default_context()) {
    if (k.empty()) return ApproxReal(1L);
    detail::require(is_admissible(k, Admissibility::SeriesAlternating), "zeta_star(" + k.str() + "): inadmissible");
    return detail::eval_chain(ctx, plain_chain(k, Link::Weak), std::nullopt, "zeta_star");
}

inline ApproxReal zeta_alt(const Composition& k, Context& ctx = default_context()) { return zeta(k, ctx); }
inline ApproxReal zeta_star_alt(const Composition& k, Context& ctx = default_context()) { return zeta_star(k, ctx); }

/// Hoffman's t(k): all indices odd.
inline ApproxReal t_value(const Composition& k, Context& ctx = default_context()) {
    if (k.empty()) return ApproxReal(1L);
    detail::require(is_admissible(k, Admissibility::SeriesAlternating), "t(" + k.str() + "): inadmissible");
    return detail::eval_chain(ctx, uniform_parity_chain(k, Parity::Odd, Link::Strict), std::nullopt, "t");
}

inline ApproxReal t_star_value(const Composition& k, Context& ctx = default_context()) {
    if (k.empty()) return ApproxReal(1L);
    detail::require(is_admissible(k, Admissibility::SeriesAlternating), "t_star(" + k.str() + "): inadmissible");
    return detail::eval_chain(ctx, uniform_parity_chain(k, Parity::Odd, Link::Weak), std::nullopt, "t_star");
}

/// T(k) = 2^r sum over m_i = i mod 2.
inline ApproxReal T_value(const Composition& k, Context& ctx = default_context()) {
    if (k.empty()) return ApproxReal(1L);
    detail::require(is_admissible(k, Admissibility::SeriesAlternating), "T(" + k.str() + "): inadmissible");
    return detail::eval_chain(ctx, interleaved_chain(k, Parity::Odd), std::nullopt, "T");
}

/// S(k) = 2^r sum over m_i = i - 1 mod 2.
inline ApproxReal S_value(const Composition& k, Context& ctx = default_context()) {
    if (k.empty()) return ApproxReal(1L);
    detail::require(is_admissible(k, Admissibility::SeriesAlternating), "S(" + k.str() + "): inadmissible");
    return detail::eval_chain(ctx, interleaved_chain(k, Parity::Even), std::nullopt, "S");
}

/// T with the regularised depth-one value T(1) := 2 log 2.
inline ApproxReal T_value_reg(const Composition& k, Context& ctx = default_context()) {
    if (k.depth() == 1 && k.last() == 1 && k.last_sign() == 1) return ApproxReal(2L) * ApproxReal(const_log2());
    return T_value(k, ctx);
}

/// M(k; eps): eps_j = +1 forces m_j even, -1 forces m_j odd; factor 2^r.
inline ApproxReal M_value(const Composition& k, const std::vector<int>& eps, Context& ctx = default_context()) {
    if (eps.size() != k.depth()) throw std::invalid_argument("M: one parity sign per entry required");
    if (k.empty()) return ApproxReal(1L);
    detail::require(k.last() >= 2, "M(" + k.str() + "): inadmissible");
    std::vector<Parity> p;
    for (int e : eps) p.push_back(e > 0 ? Parity::Even : Parity::Odd);
    return detail::eval_chain(ctx, mixed_chain(k.unsigned_copy(), p, Link::Strict, 1L << k.depth()), std::nullopt, "M");
}

/// Li_k(x) = sum_{0<n_1<...<n_r} x^{n_r} / prod n_j^{k_j}.
inline ApproxReal li_single(const Composition& k, const Real& x, Context& ctx = default_context()) {
    if (k.empty()) return ApproxReal(1L);
    Chain c = plain_chain(k.unsigned_copy(), Link::Strict);
    auto xr = detail::fold_x(c, x);
    return detail::eval_chain(ctx, c, xr, "Li");
}

/// Li_k(x_1, ..., x_r) with x_j in {+1, -1} (the alternating value), or Li* for star = true.
inline ApproxReal li_signs(const Composition& k, const std::vector<int>& x, bool star, Context& ctx = default_context()) {
    if (x.size() != k.depth()) throw std::invalid_argument("Li: one argument per entry required");
    if (k.empty()) return ApproxReal(1L);
    Composition signed_k = k.unsigned_copy().with_signs(x);
    return star ? zeta_star(signed_k, ctx) : zeta(signed_k, ctx);
}

/// Signs of the alternating value equal to lambda_k(sigma): eps_j = sigma_j sigma_{j+1}, eps_r = sigma_r.
inline std::vector<int> lambda_signs(const std::vector<int>& sigma) {
    std::vector<int> e(sigma.size());
    for (std::size_t j = 0; j < sigma.size(); ++j) e[j] = j + 1 < sigma.size() ? sigma[j] * sigma[j + 1] : sigma[j];
    return e;
}

/// lambda_k(sigma_1 x, ..., sigma_r x).
inline ApproxReal lambda_multi(const Composition& k, const std::vector<int>& sigma, const Real& x,
                               Context& ctx = default_context()) {
    if (sigma.size() != k.depth()) throw std::invalid_argument("lambda: one sign per entry required");
    if (k.empty()) return ApproxReal(1L);
    Chain c = plain_chain(k.unsigned_copy().with_signs(lambda_signs(sigma)), Link::Strict);
    auto xr = detail::fold_x(c, x);
    return detail::eval_chain(ctx, c, xr, "lambda");
}

inline ApproxReal lambda_at_one(const Composition& k, const std::vector<int>& sigma, Context& ctx = default_context()) {
    return lambda_multi(k, sigma, Real(1L), ctx);
}

/// Kaneko-Tsumura A(k; x).
inline ApproxReal A_function(const Composition& k, const Real& x, Context& ctx = default_context()) {
    if (k.empty()) return ApproxReal(1L);
    Chain c = interleaved_chain(k.unsigned_copy(), Parity::Odd);
    auto xr = detail::fold_x(c, x);
    return detail::eval_chain(ctx, c, xr, "A");
}

/// L(k; x) = 2^{-|k|} Li_k(x^2).
inline ApproxReal L_function(const Composition& k, const Real& x, Context& ctx = default_context()) {
    if (k.empty()) return ApproxReal(1L);
    Chain c = uniform_parity_chain(k.unsigned_copy(), Parity::Even, Link::Strict);
    if (abs(x) > Real(1L)) throw DomainError("L: argument outside [-1, 1]");
    std::optional<Real> xr;
    if (abs(x) < Real(1L)) xr = x;  // x^{m_r} with m_r even
    return detail::eval_chain(ctx, c, xr, "L");
}

/// t(k; x) = sum over odd m_1 < ... < m_r of x^{m_r} / prod m_j^{k_j}; t(empty; x) = 1/x.
inline ApproxReal t_function(const Composition& k, const Real& x, Context& ctx = default_context()) {
    if (k.empty()) {
        if (x.is_zero()) throw DomainError("t(empty; 0) is undefined");
        return ApproxReal(Real(1L) / x);
    }
    Chain c = uniform_parity_chain(k.unsigned_copy(), Parity::Odd, Link::Strict);
    auto xr = detail::fold_x(c, x);
    return detail::eval_chain(ctx, c, xr, "t(x)");
}

/// bar zeta(m) = -zeta(m bar); bar zeta(0) = 1/2.
inline ApproxReal bar_zeta(int m) {
    if (m < 0) throw DomainError("bar_zeta: negative argument");
    if (m == 0) return ApproxReal(from_rational(1, 2));
    if (m == 1) return ApproxReal(const_log2());
    Real f = Real(1L) - pow2(1 - m);
    return ApproxReal(f * riemann_zeta(static_cast<unsigned long>(m)));
}

/// Term-wise integral  int_0^1 x^a f(x) dx  for f = sum_m c_m x^m given by a chain.
///
/// Each term contributes c_m / (m + a + 1); the caller guarantees m + a + 1 > 0
/// wherever c_m != 0.
inline ApproxReal termwise_integral(const Chain& f, long a, Context& ctx = default_context()) {
    if (f.slots.empty()) throw std::invalid_argument("termwise_integral: empty chain");
    SeriesSpec s = chain_series(f);
    s.denominators.push_back({{s.sign_index.a, s.sign_index.b + a + 1}, 1});
    detail::require(s.convergent(), "termwise_integral: divergent exchange");
    return ctx.eval(s);
}

}  // namespace mzv

#endif  // MZV_VALUES_HPP
