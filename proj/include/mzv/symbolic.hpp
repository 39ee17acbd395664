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

// Exact polynomials in log 2 and the Riemann zeta values.
//
// A monomial is an exponent vector e with e[0] the power of log 2 and e[i]
// the power of zeta(i + 1). Coefficients are exact rationals; numbers only
// enter when a polynomial is evaluated.

#ifndef MZV_SYMBOLIC_HPP
#define MZV_SYMBOLIC_HPP

#include <map>
#include <string>
#include <vector>

#include "mzv/approx_real.hpp"
#include "mzv/rational.hpp"
#include "mzv/real.hpp"

namespace mzv {

class ZetaPolynomial {
public:
    using Monomial = std::vector<int>;

    ZetaPolynomial() = default;
    explicit ZetaPolynomial(const Rational& c) {
        if (c != 0) terms_[{}] = c;
    }

    static ZetaPolynomial log2() { return symbol(0); }
    /// zeta(s) for s >= 2.
    static ZetaPolynomial zeta(int s) { return symbol(static_cast<std::size_t>(s - 1)); }

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    ZetaPolynomial& operator+=(const ZetaPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    ZetaPolynomial& operator*=(const Rational& q) {
        if (q == 0) terms_.clear();
        for (auto& [m, c] : terms_) c *= q;
        return *this;
    }
    friend ZetaPolynomial operator+(ZetaPolynomial a, const ZetaPolynomial& b) { return a += b; }
    friend ZetaPolynomial operator*(ZetaPolynomial a, const Rational& q) { return a *= q; }
    friend ZetaPolynomial operator*(const ZetaPolynomial& a, const ZetaPolynomial& b) {
        ZetaPolynomial out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(std::max(ma.size(), mb.size()), 0);
                for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
                for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
                out.add(m, ca * cb);
            }
        return out;
    }
    friend bool operator==(const ZetaPolynomial&, const ZetaPolynomial&) = default;

    ApproxReal evaluate() const {
        ApproxReal sum(0L);
        for (const auto& [m, c] : terms_) {
            ApproxReal term = ApproxReal::exact(c);
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                const Real base = i == 0 ? const_log2() : riemann_zeta(static_cast<unsigned long>(i + 1));
                term *= ApproxReal(pow(base, m[i]));
            }
            sum += term;
        }
        return sum;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            std::string cs = c.get_str();
            const bool neg = cs.front() == '-';
            if (neg) cs.erase(0, 1);
            out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            std::string mono;
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += i == 0 ? "log(2)" : "zeta(" + std::to_string(i + 1) + ")";
                if (m[i] > 1) mono += "^" + std::to_string(m[i]);
            }
            if (mono.empty()) out += cs;
            else out += (cs == "1" ? "" : cs + "*") + mono;
        }
        return out;
    }

private:
    static ZetaPolynomial symbol(std::size_t index) {
        ZetaPolynomial p;
        Monomial m(index + 1, 0);
        m[index] = 1;
        p.terms_[m] = 1;
        return p;
    }

    void add(Monomial m, const Rational& c) {
        while (!m.empty() && m.back() == 0) m.pop_back();
        Rational& slot = terms_[m];
        slot += c;
        if (slot == 0) terms_.erase(m);
    }

    std::map<Monomial, Rational> terms_;
};

/// Coefficients e_0..e_N of exp(sum_{n>=1} s_n u^n), via n e_n = sum_k k s_k e_{n-k}.
inline std::vector<ZetaPolynomial> exp_series(const std::vector<ZetaPolynomial>& s, std::size_t N) {
    std::vector<ZetaPolynomial> e(N + 1);
    e[0] = ZetaPolynomial(Rational(1));
    for (std::size_t n = 1; n <= N; ++n) {
        ZetaPolynomial acc;
        for (std::size_t k = 1; k <= n && k < s.size(); ++k) acc += s[k] * e[n - k] * Rational(static_cast<long>(k));
        e[n] = acc * Rational(1, static_cast<long>(n));
    }
    return e;
}

/// zeta(n bar) as a polynomial: -log 2 for n = 1, -(1 - 2^{1-n}) zeta(n) otherwise.
inline ZetaPolynomial alternating_zeta_symbol(int n) {
    if (n == 1) return ZetaPolynomial::log2() * Rational(-1);
    Rational f = Rational(1) - Rational(1, Integer(1) << (n - 1));
    return ZetaPolynomial::zeta(n) * Rational(-f);
}

}  // namespace mzv

#endif  // MZV_SYMBOLIC_HPP
