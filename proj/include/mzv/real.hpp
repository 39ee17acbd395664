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

#ifndef MZV_REAL_HPP
#define MZV_REAL_HPP

#include <mpfr.h>

#include <cmath>
#include <compare>
#include <cstdlib>
#include <memory>
#include <string>
#include <utility>

namespace mzv {

/// Working precision (bits) used when a Real is created without an explicit
/// precision. Thread-local so that worker threads can run at their own setting.
inline mpfr_prec_t& default_bits() {
    thread_local mpfr_prec_t bits = 128;
    return bits;
}

/// Sets the default precision for the lifetime of the guard.
class PrecisionGuard {
public:
    explicit PrecisionGuard(mpfr_prec_t bits) : saved_(default_bits()) { default_bits() = bits; }
    ~PrecisionGuard() { default_bits() = saved_; }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    mpfr_prec_t saved_;
};

/// Arbitrary-precision binary floating point value backed by MPFR.
///
/// Copies keep the precision of the source; assignment keeps the precision of
/// the destination. Arithmetic results take the larger operand precision.
class Real {
public:
    Real() { mpfr_init2(v_, default_bits()); mpfr_set_zero(v_, 1); }
    Real(long x) { mpfr_init2(v_, default_bits()); mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(int x) : Real(static_cast<long>(x)) {}
    Real(unsigned long x) { mpfr_init2(v_, default_bits()); mpfr_set_ui(v_, x, MPFR_RNDN); }
    Real(double x) { mpfr_init2(v_, default_bits()); mpfr_set_d(v_, x, MPFR_RNDN); }
    explicit Real(const std::string& s) {
        mpfr_init2(v_, default_bits());
        if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) mpfr_set_nan(v_);
    }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    ~Real() { mpfr_clear(v_); }

    Real& operator=(const Real& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (mpfr_get_prec(v_) == mpfr_get_prec(o.v_))
            mpfr_swap(v_, o.v_);
        else
            mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }

    static Real with_bits(mpfr_prec_t bits) {
        Real r(NoInit{});
        mpfr_init2(r.v_, bits);
        mpfr_set_zero(r.v_, 1);
        return r;
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t bits() const { return mpfr_get_prec(v_); }

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(long s) { mpfr_mul_si(v_, v_, s, MPFR_RNDN); return *this; }
    Real& operator/=(long s) { mpfr_div_si(v_, v_, s, MPFR_RNDN); return *this; }

    Real operator-() const { Real r(*this); mpfr_neg(r.v_, r.v_, MPFR_RNDN); return r; }

    friend Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add); }
    friend Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub); }
    friend Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul); }
    friend Real operator/(const Real& a, const Real& b) { return binary(a, b, mpfr_div); }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const Real& a, const Real& b) {
        if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
        const int c = mpfr_cmp(a.v_, b.v_);
        return c < 0 ? std::partial_ordering::less
                     : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
    }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Fixed-point style rendering with `digits` significant digits.
    std::string str(int digits) const {
        if (mpfr_nan_p(v_)) return "nan";
        if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
        char* buf = nullptr;
        const std::string fmt = "%." + std::to_string(digits) + "Rg";
        mpfr_asprintf(&buf, fmt.c_str(), v_);
        std::string out(buf);
        mpfr_free_str(buf);
        return out;
    }

private:
    struct NoInit {};
    explicit Real(NoInit) {}

    template <class Op>
    static Real binary(const Real& a, const Real& b, Op op) {
        Real r = with_bits(std::max(a.bits(), b.bits()));
        op(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

inline Real abs(const Real& x) { Real r(x); mpfr_abs(r.raw(), r.raw(), MPFR_RNDN); return r; }
inline Real log(const Real& x) { Real r(x); mpfr_log(r.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real log1p(const Real& x) { Real r(x); mpfr_log1p(r.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real exp(const Real& x) { Real r(x); mpfr_exp(r.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real sqrt(const Real& x) { Real r(x); mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real sinh(const Real& x) { Real r(x); mpfr_sinh(r.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real cosh(const Real& x) { Real r(x); mpfr_cosh(r.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real tanh(const Real& x) { Real r(x); mpfr_tanh(r.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }
inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }

inline Real pow(const Real& x, long n) {
    Real r(x);
    mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
    return r;
}

/// 2^e as a Real.
inline Real pow2(long e) {
    Real r(1L);
    mpfr_mul_2si(r.raw(), r.raw(), e, MPFR_RNDN);
    return r;
}

inline Real const_pi() { Real r; mpfr_const_pi(r.raw(), MPFR_RNDN); return r; }
inline Real const_log2() { Real r; mpfr_const_log2(r.raw(), MPFR_RNDN); return r; }

/// Riemann zeta at an integer s >= 2, from MPFR. Used for closed-form constants
/// and as an oracle in tests; the series engine never calls it.
inline Real riemann_zeta(unsigned long s) {
    Real r;
    mpfr_zeta_ui(r.raw(), s, MPFR_RNDN);
    return r;
}

/// Unit roundoff 2^(1-bits) of the current default precision.
inline Real epsilon() { return pow2(1 - static_cast<long>(default_bits())); }

inline Real from_rational(long num, long den) { Real r(num); r /= den; return r; }

}  // namespace mzv

#endif  // MZV_REAL_HPP
