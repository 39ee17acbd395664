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

// Summation of one-parameter series with nested-sum coefficients
//
//     S = c * sum_{n >= n0} sign^{e(n)} x^{g(n)} prod_i F_i(b_i(n)) / prod_j d_j(n)^{p_j}
//
// where e, g, b_i, d_j are affine in n and each F_i is a ChainTable value.
// Partial sums are recorded on a fixed geometric grid of even n; the limit is
// extrapolated by a least-squares fit in the basis {1} and log(n)^j / n^i.

#ifndef MZV_SERIES_HPP
#define MZV_SERIES_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mzv/approx_real.hpp"
#include "mzv/composition.hpp"
#include "mzv/nested_sum.hpp"
#include "mzv/real.hpp"

namespace mzv {

/// a * n + b.
struct Affine {
    long a = 1;
    long b = 0;
    long operator()(long n) const { return a * n + b; }
};

struct OuterFactor {
    Affine base;  ///< denominator base, must be positive where the term is nonzero
    int power = 1;
};

struct InnerFactor {
    Chain chain;
    Affine bound;  ///< the chain is evaluated with all indices <= bound(n)
};

struct SeriesSpec {
    long n_start = 1;
    std::vector<OuterFactor> denominators;
    int sign = 1;               ///< term carries sign^{sign_index(n)}
    Affine sign_index{1, 0};
    std::optional<Real> x;      ///< term carries x^{x_index(n)} when set, |x| < 1
    Affine x_index{1, 0};
    std::vector<InnerFactor> inner;
    Real coefficient{1L};

    int outer_power() const {
        int p = 0;
        for (const auto& d : denominators) p += d.power;
        return p;
    }

    int log_order() const {
        int p = 0;
        for (const auto& f : inner) p += f.chain.log_order();
        return p;
    }

    bool alternating() const { return sign < 0 && (sign_index.a & 1); }
    bool geometric() const { return x.has_value() && abs(*x) < Real(1L); }

    bool convergent() const {
        const int p = outer_power();
        return p >= 2 || (p >= 1 && alternating()) || geometric();
    }
};

struct SeriesOptions {
    mpfr_prec_t bits = 128;
    long terms = 1L << 14;      ///< initial truncation
    long max_terms = 1L << 20;  ///< escalation ceiling
    double tol = 1e-12;         ///< target radius
    int orders = 5;             ///< powers 1/n .. 1/n^orders in the tail model
};

struct SeriesResult {
    ApproxReal value;
    long terms = 0;
    bool converged = false;
};

namespace detail {

/// Even checkpoints, twelve per octave, reused across escalation steps.
inline std::vector<long> checkpoint_grid(long lo, long hi) {
    std::vector<long> out;
    for (int j = 0;; ++j) {
        const long v = 2 * std::lround(std::pow(2.0, j / 12.0) / 2.0);
        if (v > hi) break;
        if (v >= lo && (out.empty() || out.back() != v)) out.push_back(v);
    }
    if (out.empty() || out.back() != hi) out.push_back(hi);
    return out;
}

/// Least-squares solve of A c = y, returning c[0]. Columns are rescaled first.
inline Real least_squares_constant(std::vector<std::vector<Real>> a, const std::vector<Real>& y) {
    const std::size_t rows = a.size(), cols = a.front().size();
    for (std::size_t c = 0; c < cols; ++c) {
        Real m(0L);
        for (std::size_t r = 0; r < rows; ++r) m = max(m, abs(a[r][c]));
        if (m.is_zero()) continue;
        for (std::size_t r = 0; r < rows; ++r) a[r][c] /= m;
    }
    // Normal equations with Gaussian elimination; the fit runs at several
    // times the working precision so their squared condition number is harmless.
    std::vector<std::vector<Real>> g(cols, std::vector<Real>(cols + 1, Real(0L)));
    for (std::size_t i = 0; i < cols; ++i) {
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t r = 0; r < rows; ++r) g[i][j] += a[r][i] * a[r][j];
        for (std::size_t r = 0; r < rows; ++r) g[i][cols] += a[r][i] * y[r];
    }
    for (std::size_t p = 0; p < cols; ++p) {
        std::size_t best = p;
        for (std::size_t r = p + 1; r < cols; ++r)
            if (abs(g[r][p]) > abs(g[best][p])) best = r;
        std::swap(g[p], g[best]);
        if (g[p][p].is_zero()) throw std::runtime_error("series fit: singular system");
        for (std::size_t r = p + 1; r < cols; ++r) {
            const Real f = g[r][p] / g[p][p];
            for (std::size_t c = p; c <= cols; ++c) g[r][c] -= f * g[p][c];
        }
    }
    std::vector<Real> c(cols, Real(0L));
    for (std::size_t i = cols; i-- > 0;) {
        Real s = g[i][cols];
        for (std::size_t j = i + 1; j < cols; ++j) s -= g[i][j] * c[j];
        c[i] = s / g[i][i];
    }
    // Column 0 is the constant, scaled by 1.
    return c[0];
}

}  // namespace detail

/// Extrapolates partial sums S(n) to n -> infinity.
///
/// Model: S(n) = S + sum_{i=1..orders} sum_{j=0..log_order} c_ij log(n)^j / n^i.
/// The radius is the spread between the full model, the model with one fewer
/// order, and the full model fitted on the lower part of the window.
inline ApproxReal tail_correct(const std::vector<long>& n, const std::vector<Real>& partial, int log_order,
                               int orders, mpfr_prec_t bits) {
    if (n.size() != partial.size() || n.size() < 3) throw std::invalid_argument("tail_correct: need >= 3 partial sums");
    bool constant = true;
    for (const Real& s : partial)
        if (!(s == partial.back())) constant = false;
    if (constant) return ApproxReal(partial.back(), 0.0);

    PrecisionGuard guard(4 * bits + 64);
    auto fit = [&](std::size_t lo, std::size_t hi, int ord) {
        std::vector<std::vector<Real>> a;
        std::vector<Real> y;
        for (std::size_t r = lo; r < hi; ++r) {
            const Real nn(n[r]);
            const Real ln = log(nn);
            std::vector<Real> row{Real(1L)};
            Real inv = Real(1L) / nn, ip = inv;
            for (int i = 1; i <= ord; ++i, ip *= inv) {
                Real lp(1L);
                for (int j = 0; j <= log_order; ++j, lp *= ln) row.push_back(ip * lp);
            }
            a.push_back(std::move(row));
            Real yy = Real::with_bits(default_bits());
            mpfr_set(yy.raw(), partial[r].raw(), MPFR_RNDN);
            y.push_back(yy);
        }
        const std::size_t unknowns = a.front().size();
        if (hi - lo < unknowns) throw std::runtime_error("tail_correct: too few checkpoints for the model");
        return detail::least_squares_constant(std::move(a), y);
    };
    const std::size_t m = n.size();
    const int unknown_full = 1 + orders * (log_order + 1);
    int ord = orders;
    while (ord > 1 && static_cast<std::size_t>(1 + ord * (log_order + 1)) * 3 / 2 > m) --ord;
    (void)unknown_full;
    Real full = fit(0, m, ord);
    Real reduced = fit(0, m, ord - 1 > 0 ? ord - 1 : 1);
    const std::size_t unknowns = static_cast<std::size_t>(1 + ord * (log_order + 1));
    const std::size_t cut = std::max(unknowns + 2, (m * 2) / 3);
    double spread = abs(full - reduced).to_double();
    if (cut < m) spread = std::max(spread, abs(full - fit(0, cut, ord)).to_double());
    Real out = Real::with_bits(bits);
    mpfr_set(out.raw(), full.raw(), MPFR_RNDN);
    const double floor = std::ldexp(std::fabs(out.to_double()) + 1.0, 8 - static_cast<int>(bits));
    return ApproxReal(out, spread + floor);
}

/// Stateful evaluator: advances the series incrementally so that escalation
/// reuses all work already done.
class SeriesRunner {
public:
    SeriesRunner(const SeriesSpec& spec, mpfr_prec_t bits) : spec_(spec), bits_(bits) {
        PrecisionGuard guard(bits_ + 32);
        for (const auto& f : spec_.inner) tables_.emplace_back(f.chain);
        sum_ = Real(0L);
        n_ = spec_.n_start - 1;
        if (spec_.x) xr_ = Real::with_bits(bits_ + 32), mpfr_set(xr_.raw(), spec_.x->raw(), MPFR_RNDN);
    }

    long position() const { return n_; }
    const Real& sum() const { return sum_; }

    /// Term at n (n must equal position() + 1); advances the running sum.
    const Real& step() {
        PrecisionGuard guard(bits_ + 32);
        const long n = ++n_;
        term_ = spec_.coefficient;
        for (std::size_t i = 0; i < tables_.size(); ++i) {
            const long b = spec_.inner[i].bound(n);
            if (spec_.inner[i].chain.depth() == 0) continue;
            if (b <= 0) {
                term_ = Real(0L);
                break;
            }
            term_ *= tables_[i].value_at(b);
        }
        if (term_.is_zero()) return term_;
        for (const auto& d : spec_.denominators) {
            const long base = d.base(n);
            if (base == 0) throw DomainError("series: zero denominator at a nonzero term");
            for (int p = 0; p < d.power; ++p) term_ /= base;
        }
        if (spec_.sign < 0 && (spec_.sign_index(n) & 1)) term_ = -term_;
        if (spec_.x) {
            const long e = spec_.x_index(n);
            Real xp(xr_);
            mpfr_pow_si(xp.raw(), xr_.raw(), e, MPFR_RNDN);
            term_ *= xp;
        }
        sum_ += term_;
        return term_;
    }

private:
    SeriesSpec spec_;
    mpfr_prec_t bits_;
    std::vector<ChainTable<Real>> tables_;
    Real sum_, term_, xr_;
    long n_ = 0;
};

/// Evaluates a convergent series; escalates the truncation by 4x until the
/// radius meets `opts.tol` or `opts.max_terms` is reached.
inline SeriesResult sum_series(const SeriesSpec& spec, const SeriesOptions& opts = {}) {
    if (!spec.convergent()) throw DomainError("series: divergent series");
    SeriesRunner run(spec, opts.bits);
    SeriesResult res;

    if (spec.geometric()) {
        const double q = std::fabs(spec.x->to_double());
        const double eps = std::ldexp(1.0, -static_cast<int>(opts.bits) - 8);
        int small = 0;
        double last = 0;
        while (run.position() < opts.max_terms * 16) {
            last = std::fabs(run.step().to_double());
            const double s = std::fabs(run.sum().to_double());
            if (last <= eps * std::max(s, 1e-300) && run.position() > spec.n_start + 4) {
                if (++small >= 8) break;
            } else {
                small = 0;
            }
        }
        Real v = Real::with_bits(opts.bits);
        mpfr_set(v.raw(), run.sum().raw(), MPFR_RNDN);
        const double rad = last * q / (1 - q) * 4 + std::ldexp(std::fabs(v.to_double()) + 1.0, 4 - static_cast<int>(opts.bits));
        res.value = ApproxReal(v, rad);
        res.terms = run.position();
        res.converged = rad <= opts.tol;
        return res;
    }

    std::vector<long> ns;
    std::vector<Real> partial;
    const int logs = std::min(spec.log_order(), 5);
    long target = std::max<long>(opts.terms, 256);
    auto grid = detail::checkpoint_grid(2, opts.max_terms);
    std::size_t gi = 0;
    for (;;) {
        // Grid points up to target, plus target itself.
        std::vector<long> stops;
        for (; gi < grid.size() && grid[gi] <= target; ++gi) stops.push_back(grid[gi]);
        for (long s : stops) {
            if (s < spec.n_start) continue;
            while (run.position() < s) run.step();
            ns.push_back(s);
            partial.push_back(run.sum());
        }
        std::vector<long> wn;
        std::vector<Real> wp;
        for (std::size_t i = 0; i < ns.size(); ++i)
            if (ns[i] * 16 >= target && ns[i] <= target) {
                wn.push_back(ns[i]);
                wp.push_back(partial[i]);
            }
        res.value = tail_correct(wn, wp, logs, opts.orders, opts.bits);
        res.terms = run.position();
        res.converged = res.value.radius <= opts.tol;
        if (res.converged || target >= opts.max_terms) break;
        target = std::min(target * 4, opts.max_terms);
    }
    return res;
}

}  // namespace mzv

#endif  // MZV_SERIES_HPP
