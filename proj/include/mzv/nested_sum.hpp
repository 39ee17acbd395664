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

// Incremental evaluation of constrained nested sums
//
//     sum_{m_1 R_2 m_2 R_3 ... R_r m_r <= M}  prod_j  w_j(m_j),
//     w_j(m) = [m in class_j] * base_j^m * sign_j^m / m^{k_j},
//
// where each link R_j is '<' or '<=' and class_j restricts the parity of m.
// Every harmonic family used in this library (plain, star, alternating,
// parametric, T/S interleaved, odd-only t sums) is an instance: parity
// interleaving is expressed on the integer index itself, so e.g. the
// T-harmonic sum T_n(k) is the chain with classes odd, even, odd, ... and
// bound M = 2n - 1.

#ifndef MZV_NESTED_SUM_HPP
#define MZV_NESTED_SUM_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "mzv/composition.hpp"
#include "mzv/rational.hpp"
#include "mzv/real.hpp"

namespace mzv {

enum class Parity { Any, Odd, Even };
enum class Link { Strict, Weak };

inline bool parity_ok(Parity p, long m) {
    switch (p) {
        case Parity::Any: return true;
        case Parity::Odd: return (m & 1) != 0;
        case Parity::Even: return (m & 1) == 0;
    }
    return false;
}

/// One summation index of a chain.
struct Slot {
    int exponent = 1;
    int sign = 1;                  ///< weight carries sign^m
    Parity parity = Parity::Any;
    Link link = Link::Strict;      ///< relation to the previous index
    long min_index = 1;
};

/// A chain of slots with an integer prefactor (e.g. 2^r for level-two sums).
struct Chain {
    std::vector<Slot> slots;
    long coefficient = 1;

    std::size_t depth() const { return slots.size(); }

    /// Number of slots that can make the partial sums grow like a power of log.
    int log_order() const {
        int p = 0;
        for (const Slot& s : slots)
            if (s.exponent == 1 && (s.sign == 1 || s.parity != Parity::Any)) ++p;
        return p;
    }

    std::string key() const {
        std::string out = std::to_string(coefficient) + "[";
        for (const Slot& s : slots) {
            out += s.link == Link::Strict ? "<" : "<=";
            out += std::to_string(s.exponent);
            if (s.sign < 0) out += "-";
            if (s.parity == Parity::Odd) out += "o";
            if (s.parity == Parity::Even) out += "e";
            if (s.min_index != 1) out += "@" + std::to_string(s.min_index);
        }
        return out + "]";
    }
};

/// Plain chain from a composition: strict links for MHS-type sums, weak for star sums.
inline Chain plain_chain(const Composition& k, Link link) {
    Chain c;
    for (std::size_t i = 0; i < k.depth(); ++i) c.slots.push_back({k.part(i), k.sign(i), Parity::Any, link, 1});
    return c;
}

/// Level-two chain with parities starting at `first` and alternating.
inline Chain interleaved_chain(const Composition& k, Parity first, long coefficient_per_slot = 2) {
    Chain c;
    Parity p = first;
    for (std::size_t i = 0; i < k.depth(); ++i) {
        c.slots.push_back({k.part(i), k.sign(i), p, Link::Strict, 1});
        p = (p == Parity::Odd) ? Parity::Even : Parity::Odd;
        c.coefficient *= coefficient_per_slot;
    }
    return c;
}

/// Chain whose slots all share one parity class.
inline Chain uniform_parity_chain(const Composition& k, Parity parity, Link link) {
    Chain c;
    for (std::size_t i = 0; i < k.depth(); ++i) c.slots.push_back({k.part(i), k.sign(i), parity, link, 1});
    return c;
}

namespace detail {

template <class Scalar>
Scalar one() {
    if constexpr (std::is_same_v<Scalar, Rational>) return Rational(1);
    else return Scalar(1L);
}

template <class Scalar>
Scalar zero() {
    if constexpr (std::is_same_v<Scalar, Rational>) return Rational(0);
    else return Scalar(0L);
}

/// Fills out[e] = 1/m^e for e = 0..max_e.
inline void inverse_powers(long m, int max_e, std::vector<Real>& out) {
    out.resize(static_cast<std::size_t>(max_e) + 1);
    out[0] = Real(1L);
    if (max_e == 0) return;
    mpfr_set_ui(out[1].raw(), 1, MPFR_RNDN);
    mpfr_div_ui(out[1].raw(), out[1].raw(), static_cast<unsigned long>(m), MPFR_RNDN);
    for (int e = 2; e <= max_e; ++e) mpfr_mul(out[e].raw(), out[e - 1].raw(), out[1].raw(), MPFR_RNDN);
}

inline void inverse_powers(long m, int max_e, std::vector<Rational>& out) {
    out.resize(static_cast<std::size_t>(max_e) + 1);
    out[0] = 1;
    if (max_e == 0) return;
    out[1] = Rational(1, m);
    for (int e = 2; e <= max_e; ++e) out[e] = out[e - 1] * out[1];
}

}  // namespace detail

/// Running prefix values P_j(M) of a chain, advanced one index at a time.
///
/// P_j(M) is the sum over the first j slots with all indices <= M. Building
/// the table to bound M costs O(M * depth) scalar operations.
template <class Scalar>
class ChainTable {
public:
    explicit ChainTable(Chain chain, std::vector<std::optional<Scalar>> bases = {})
        : chain_(std::move(chain)), bases_(std::move(bases)) {
        bases_.resize(chain_.depth());
        prefix_.assign(chain_.depth() + 1, detail::zero<Scalar>());
        prefix_[0] = detail::one<Scalar>();
        delta_.assign(chain_.depth() + 1, detail::zero<Scalar>());
        base_pow_.assign(chain_.depth(), detail::one<Scalar>());
        for (const Slot& s : chain_.slots) max_exp_ = std::max(max_exp_, s.exponent);
        coefficient_ = Scalar(chain_.coefficient);
    }

    long bound() const { return bound_; }
    const Chain& chain() const { return chain_; }

    /// Advances the table so that bound() == m (no-op if already there).
    void advance_to(long m) {
        while (bound_ < m) step();
    }

    /// Value of the full chain (times its coefficient) at the current bound.
    Scalar value() const { return coefficient_ * prefix_.back(); }

    /// Value of the full chain at bound m; m must not decrease between calls.
    Scalar value_at(long m) {
        if (m < bound_) throw std::logic_error("ChainTable: bounds must be non-decreasing");
        advance_to(m);
        return value();
    }

    const Scalar& raw_prefix() const { return prefix_.back(); }
    const Scalar& coefficient() const { return coefficient_; }

private:
    void step() {
        const long m = ++bound_;
        const std::size_t r = chain_.depth();
        if (r == 0) return;
        detail::inverse_powers(m, max_exp_, inv_);
        delta_[0] = detail::zero<Scalar>();
        for (std::size_t j = 1; j <= r; ++j) {
            const Slot& s = chain_.slots[j - 1];
            if (bases_[j - 1]) base_pow_[j - 1] *= *bases_[j - 1];
            if (!parity_ok(s.parity, m) || m < s.min_index) {
                delta_[j] = detail::zero<Scalar>();
                continue;
            }
            // Weak links see the previous slot updated at m, strict links do not.
            if (s.link == Link::Weak && j > 1) {
                tmp_ = prefix_[j - 1];
                tmp_ += delta_[j - 1];
            } else {
                tmp_ = prefix_[j - 1];
            }
            tmp_ *= inv_[static_cast<std::size_t>(s.exponent)];
            if (s.sign < 0 && (m & 1)) tmp_ = -tmp_;
            if (bases_[j - 1]) tmp_ *= base_pow_[j - 1];
            delta_[j] = tmp_;
        }
        for (std::size_t j = 1; j <= r; ++j) prefix_[j] += delta_[j];
    }

    Chain chain_;
    std::vector<std::optional<Scalar>> bases_;
    std::vector<Scalar> prefix_;
    std::vector<Scalar> delta_;
    std::vector<Scalar> base_pow_;
    std::vector<Scalar> inv_;
    Scalar tmp_{};
    Scalar coefficient_{};
    int max_exp_ = 0;
    long bound_ = 0;
};

}  // namespace mzv

#endif  // MZV_NESTED_SUM_HPP
