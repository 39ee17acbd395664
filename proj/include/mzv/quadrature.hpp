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

// Double-exponential (tanh-sinh) quadrature on (0, 1).
//
// With x = (1 + tanh(pi/2 sinh t)) / 2 the integrand decays doubly
// exponentially at both ends, so logarithmic endpoint singularities cost
// nothing extra. The step halves each level and only new nodes are added;
// the error estimate is the change between the last two levels.

#ifndef MZV_QUADRATURE_HPP
#define MZV_QUADRATURE_HPP

#include <functional>

#include "mzv/approx_real.hpp"
#include "mzv/real.hpp"

namespace mzv {

struct QuadratureOptions {
    mpfr_prec_t bits = 128;
    int max_level = 12;
    double tol = 1e-20;
};

struct QuadratureResult {
    ApproxReal value;
    int level = 0;
    bool converged = false;
};

/// int_0^1 f(x) dx. `f` receives x and 1 - x (both accurate near the ends).
inline QuadratureResult tanh_sinh(const std::function<Real(const Real& x, const Real& one_minus_x)>& f,
                                  const QuadratureOptions& opts = {}) {
    PrecisionGuard guard(opts.bits + 32);
    const Real half_pi = const_pi() / Real(2L);
    const Real tiny = pow2(-static_cast<long>(opts.bits) - 40);

    // Contribution of node t: w(t) f(x(t)), summed for +t and -t.
    auto node = [&](const Real& t) -> Real {
        const Real u = half_pi * sinh(t);
        const Real c = cosh(u);
        // 1 - x = 1 / (1 + e^{2u}), x = 1 / (1 + e^{-2u}).
        const Real e = exp(Real(2L) * u);
        const Real one = Real(1L);
        const Real om = one / (one + e);       // 1 - x(t)
        const Real xm = one / (one + one / e);  // x(t)
        const Real w = half_pi * cosh(t) / (Real(2L) * c * c);
        Real s(0L);
        if (!(om < tiny) && !(xm < tiny)) s += w * f(xm, om);
        // Mirror node: x(-t) = 1 - x(t).
        if (!(om < tiny) && !(xm < tiny)) s += w * f(om, xm);
        return s;
    };

    Real h(1L);
    const Real tmax(Real(9L) / Real(2L));  // x(t) is within 2^-200 of an end beyond this
    Real sum = half_pi / Real(2L) * f(Real(1L) / Real(2L), Real(1L) / Real(2L));  // w(0) = pi/4
    for (Real t = h; t <= tmax; t += h) sum += node(t);
    Real prev = sum * h;
    QuadratureResult res;
    double err = INFINITY;
    for (int level = 1; level <= opts.max_level; ++level) {
        h /= 2L;
        for (Real t = h; t <= tmax; t += Real(2L) * h) sum += node(t);
        Real cur = sum * h;
        err = abs(cur - prev).to_double();
        prev = cur;
        res.level = level;
        if (level >= 3 && err < opts.tol) {
            res.converged = true;
            break;
        }
    }
    Real out = Real::with_bits(opts.bits);
    mpfr_set(out.raw(), prev.raw(), MPFR_RNDN);
    // The change between levels overestimates the error of the finer level.
    res.value = ApproxReal(out, res.converged ? std::max(err, std::ldexp(1.0, 8 - static_cast<int>(opts.bits))) : err);
    return res;
}

/// Convenience overload for integrands that only need x.
inline QuadratureResult tanh_sinh_simple(const std::function<Real(const Real& x)>& f, const QuadratureOptions& opts = {}) {
    return tanh_sinh([&](const Real& x, const Real&) { return f(x); }, opts);
}

}  // namespace mzv

#endif  // MZV_QUADRATURE_HPP
