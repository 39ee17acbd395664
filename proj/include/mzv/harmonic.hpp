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

// Finite harmonic-type sums as exact rationals.

#ifndef MZV_HARMONIC_HPP
#define MZV_HARMONIC_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mzv/composition.hpp"
#include "mzv/nested_sum.hpp"
#include "mzv/rational.hpp"
#include "mzv/real.hpp"

namespace mzv {

enum class HarmonicFamily {
    Mhs,        ///< zeta_n(k),   0 < m_1 < ... < m_r <= n
    MhsStar,    ///< zeta*_n(k),  0 < m_1 <= ... <= m_r <= n
    T,          ///< T_n(k), odd/even interleaved, bound 2n-1
    S,          ///< S_n(k), even/odd interleaved, bound 2n-1
    t,          ///< t_n(k), odd denominators
    tStar,      ///< t*_n(k)
    HatTStar,   ///< odd denominators, 2 <= n_1 <= ... <= n_r <= n
    sStar,      ///< first denominator 2n_1 - 2, then odd, 2 <= n_1 <= ... <= n
};

inline std::string family_name(HarmonicFamily f) {
    switch (f) {
        case HarmonicFamily::Mhs: return "mhs";
        case HarmonicFamily::MhsStar: return "mhss";
        case HarmonicFamily::T: return "T";
        case HarmonicFamily::S: return "S";
        case HarmonicFamily::t: return "t";
        case HarmonicFamily::tStar: return "tstar";
        case HarmonicFamily::HatTStar: return "hattstar";
        case HarmonicFamily::sStar: return "sstar";
    }
    return "?";
}

inline std::optional<HarmonicFamily> parse_family(const std::string& s) {
    for (auto f : {HarmonicFamily::Mhs, HarmonicFamily::MhsStar, HarmonicFamily::T, HarmonicFamily::S,
                   HarmonicFamily::t, HarmonicFamily::tStar, HarmonicFamily::HatTStar, HarmonicFamily::sStar})
        if (family_name(f) == s) return f;
    if (s == "zeta") return HarmonicFamily::Mhs;
    if (s == "zeta_star") return HarmonicFamily::MhsStar;
    return std::nullopt;
}

/// The chain realising a family on the integer index, and the map n -> bound.
struct HarmonicShape {
    Chain chain;
    long scale = 1;   ///< bound = scale * n + offset
    long offset = 0;

    long bound(long n) const { return scale * n + offset; }
};

inline HarmonicShape harmonic_shape(HarmonicFamily family, const Composition& k) {
    switch (family) {
        case HarmonicFamily::Mhs: return {plain_chain(k, Link::Strict), 1, 0};
        case HarmonicFamily::MhsStar: return {plain_chain(k, Link::Weak), 1, 0};
        case HarmonicFamily::T: return {interleaved_chain(k, Parity::Odd), 2, -1};
        case HarmonicFamily::S: return {interleaved_chain(k, Parity::Even), 2, -1};
        case HarmonicFamily::t: return {uniform_parity_chain(k, Parity::Odd, Link::Strict), 2, -1};
        case HarmonicFamily::tStar: return {uniform_parity_chain(k, Parity::Odd, Link::Weak), 2, -1};
        case HarmonicFamily::HatTStar: {
            Chain c = uniform_parity_chain(k, Parity::Odd, Link::Weak);
            if (!c.slots.empty()) c.slots[0].min_index = 3;
            return {c, 2, -1};
        }
        case HarmonicFamily::sStar: {
            Chain c = uniform_parity_chain(k, Parity::Odd, Link::Weak);
            if (!c.slots.empty()) {
                c.slots[0].parity = Parity::Even;
                c.slots[0].min_index = 2;
            }
            return {c, 2, -1};
        }
    }
    throw std::logic_error("harmonic_shape: unknown family");
}

/// Values of one harmonic family for n = 0..n_max, built in a single pass.
template <class Scalar>
struct PrefixTable {
    HarmonicFamily family;
    Composition k;
    long n_max = 0;
    std::vector<Scalar> values;  ///< values[n]

    const Scalar& operator[](long n) const { return values.at(static_cast<std::size_t>(n)); }
};

template <class Scalar = Rational>
PrefixTable<Scalar> build_prefix_table(HarmonicFamily family, const Composition& k, long n_max) {
    HarmonicShape shape = harmonic_shape(family, k);
    ChainTable<Scalar> table(shape.chain);
    PrefixTable<Scalar> out{family, k, n_max, {}};
    out.values.reserve(static_cast<std::size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) {
        const long b = shape.bound(n);
        if (b <= 0) {
            // Empty range: only the empty composition contributes.
            out.values.push_back(k.empty() ? Scalar(1L) : Scalar(0L));
            continue;
        }
        out.values.push_back(table.value_at(b));
    }
    return out;
}

template <class Scalar = Rational>
Scalar harmonic_sum(HarmonicFamily family, const Composition& k, long n) {
    if (n < 0) throw std::invalid_argument("harmonic_sum: n must be nonnegative");
    HarmonicShape shape = harmonic_shape(family, k);
    const long b = shape.bound(n);
    if (b <= 0) return k.empty() ? Scalar(1L) : Scalar(0L);
    ChainTable<Scalar> table(shape.chain);
    return table.value_at(b);
}

/// zeta_n(k); signed entries give the alternating sums.
inline Rational mhs(const Composition& k, long n) { return harmonic_sum(HarmonicFamily::Mhs, k, n); }
inline Rational mhss(const Composition& k, long n) { return harmonic_sum(HarmonicFamily::MhsStar, k, n); }
inline Rational mths_T(const Composition& k, long n) { return harmonic_sum(HarmonicFamily::T, k, n); }
inline Rational mshs_S(const Composition& k, long n) { return harmonic_sum(HarmonicFamily::S, k, n); }
inline Rational ths_t(const Composition& k, long n, bool star) {
    return harmonic_sum(star ? HarmonicFamily::tStar : HarmonicFamily::t, k, n);
}
inline Rational aux_hat_t_star(const Composition& k, long n) { return harmonic_sum(HarmonicFamily::HatTStar, k, n); }
inline Rational aux_s_star(const Composition& k, long n) { return harmonic_sum(HarmonicFamily::sStar, k, n); }

/// zeta_n(k; x) or zeta*_n(k; x) with real parameters |x_j| <= 1.
inline Real parametric_mhs(const Composition& k, std::span<const Real> x, long n, bool star) {
    if (x.size() != k.depth()) throw std::invalid_argument("parametric_mhs: one parameter per entry required");
    std::vector<std::optional<Real>> bases;
    for (const Real& xi : x) {
        if (abs(xi) > Real(1L)) throw DomainError("parametric_mhs: |x_j| must not exceed 1");
        bases.emplace_back(xi);
    }
    if (k.empty()) return Real(1L);
    ChainTable<Real> table(plain_chain(k.unsigned_copy(), star ? Link::Weak : Link::Strict), std::move(bases));
    return table.value_at(n);
}

}  // namespace mzv

#endif  // MZV_HARMONIC_HPP
