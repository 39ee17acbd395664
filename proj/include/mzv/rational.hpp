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

#ifndef MZV_RATIONAL_HPP
#define MZV_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "mzv/real.hpp"

namespace mzv {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational inverse_power(long m, int k) {
    Integer d;
    mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(m < 0 ? -m : m), static_cast<unsigned long>(k));
    if (m < 0 && (k & 1)) d = -d;
    Rational r(Integer(1), d);
    r.canonicalize();
    return r;
}

inline Real to_real(const Rational& q) {
    Real r;
    mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace mzv

#endif  // MZV_RATIONAL_HPP
