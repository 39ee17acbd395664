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

#ifndef MZV_APPROX_REAL_HPP
#define MZV_APPROX_REAL_HPP

#include <cmath>
#include <cstdio>
#include <string>

#include "mzv/rational.hpp"
#include "mzv/real.hpp"

namespace mzv {

/// A real number together with an error radius.
///
/// The radius of a series value is a modelled estimate of the truncation
/// error, not a certified bound. Arithmetic widens radii conservatively and
/// always adds one rounding unit of the result.
struct ApproxReal {
    Real value;
    double radius = 0.0;

    ApproxReal() = default;
    ApproxReal(Real v, double r = 0.0) : value(std::move(v)), radius(r) {}
    ApproxReal(long v) : value(v) {}
    ApproxReal(int v) : value(static_cast<long>(v)) {}
    static ApproxReal exact(const Rational& q) { return ApproxReal(to_real(q), 0.0); }

    double to_double() const { return value.to_double(); }

    /// Whether `x` lies within the radius (plus `slack`) of this value.
    bool contains(const Real& x, double slack = 0.0) const {
        return abs(value - x).to_double() <= radius + slack;
    }

    ApproxReal& operator+=(const ApproxReal& o) {
        value += o.value;
        radius = radius + o.radius + rounding(value);
        return *this;
    }
    ApproxReal& operator-=(const ApproxReal& o) {
        value -= o.value;
        radius = radius + o.radius + rounding(value);
        return *this;
    }
    ApproxReal& operator*=(const ApproxReal& o) {
        const double a = std::fabs(value.to_double()), b = std::fabs(o.value.to_double());
        value *= o.value;
        radius = a * o.radius + b * radius + radius * o.radius + rounding(value);
        return *this;
    }
    ApproxReal& operator*=(const Rational& q) {
        value *= to_real(q);
        radius = radius * std::fabs(q.get_d()) + rounding(value);
        return *this;
    }
    ApproxReal& operator/=(const ApproxReal& o) {
        const double b = std::fabs(o.value.to_double());
        const double lo = b - o.radius;
        const double rel = std::fabs(value.to_double()) * o.radius / (b * (lo > 0 ? lo : 0.0));
        value /= o.value;
        radius = (lo > 0 ? radius / lo + rel : INFINITY) + rounding(value);
        return *this;
    }

    ApproxReal operator-() const { return ApproxReal(-value, radius); }

    friend ApproxReal operator+(ApproxReal a, const ApproxReal& b) { return a += b; }
    friend ApproxReal operator-(ApproxReal a, const ApproxReal& b) { return a -= b; }
    friend ApproxReal operator*(ApproxReal a, const ApproxReal& b) { return a *= b; }
    friend ApproxReal operator*(ApproxReal a, const Rational& q) { return a *= q; }
    friend ApproxReal operator*(const Rational& q, ApproxReal a) { return a *= q; }
    friend ApproxReal operator/(ApproxReal a, const ApproxReal& b) { return a /= b; }

private:
    static double rounding(const Real& v) {
        return std::ldexp(std::fabs(v.to_double()), 1 - static_cast<int>(v.bits()));
    }
};

inline ApproxReal pow(const ApproxReal& x, long n) {
    ApproxReal r(1L);
    for (long i = 0; i < n; ++i) r *= x;
    return r;
}

/// Renders "value ± radius" with `digits` significant digits.
inline std::string to_string(const ApproxReal& a, int digits) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", a.radius);
    return a.value.str(digits) + " +/- " + buf;
}

}  // namespace mzv

#endif  // MZV_APPROX_REAL_HPP
