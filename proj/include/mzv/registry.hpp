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

// Data-driven registry of identities.
//
// An entry owns a parameter enumerator (all instances up to a weight) and an
// evaluator returning both sides. Engines are never touched to add one.
// A check passes when |lhs - rhs| <= tol and the combined error radius of the
// two sides is itself <= tol, so an unconverged evaluation cannot pass.

#ifndef MZV_REGISTRY_HPP
#define MZV_REGISTRY_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "mzv/closed_forms.hpp"

namespace mzv {

using Params = nlohmann::json;

struct IdentityEntry {
    std::string id;
    std::string summary;
    /// All parameter sets whose weight is <= max_weight, in a fixed order.
    std::function<std::vector<Params>(int max_weight)> enumerate;
    std::function<Sides(const Params&, Context&)> evaluate;
};

struct IdentityReport {
    std::string id;
    Params params;
    ApproxReal lhs, rhs, diff;
    double tol = 1e-6;
    bool pass = false;
    std::string error;  ///< nonempty when evaluation threw

    nlohmann::json to_json(int digits) const {
        nlohmann::json j{{"id", id}, {"params", params}, {"tol", tol}, {"pass", pass}};
        if (error.empty()) {
            j["lhs"] = to_string(lhs, digits);
            j["rhs"] = to_string(rhs, digits);
            j["diff"] = std::abs(diff.value.to_double());
        } else {
            j["lhs"] = nullptr;
            j["rhs"] = nullptr;
            j["diff"] = nullptr;
            j["error"] = error;
        }
        return j;
    }
};

class UnknownIdentity : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace registry_detail {

inline Composition comp(const Params& p, const char* key) {
    const auto& v = p.at(key);
    if (v.is_string()) return parse_composition(v.get<std::string>());
    return Composition(v.get<std::vector<int>>());
}

inline int num(const Params& p, const char* key) { return p.at(key).get<int>(); }

inline std::vector<int> signs(const Params& p, const char* key) { return p.at(key).get<std::vector<int>>(); }

inline int sign(const Params& p, const char* key) {
    const int s = num(p, key);
    if (s != 1 && s != -1) throw DomainError(std::string(key) + " must be +1 or -1");
    return s;
}

/// All compositions of weight w with depth <= max_depth, in lexicographic order.
inline std::vector<std::vector<int>> compositions_of(int w, int max_depth) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            if (!cur.empty()) out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_depth) return;
        for (int a = 1; a <= left; ++a) {
            cur.push_back(a);
            self(self, left - a);
            cur.pop_back();
        }
    };
    rec(rec, w);
    return out;
}

/// Compositions of weight lo..hi with depth <= max_depth.
inline std::vector<std::vector<int>> compositions_upto(int lo, int hi, int max_depth) {
    std::vector<std::vector<int>> out;
    for (int w = lo; w <= hi; ++w)
        for (auto& c : compositions_of(w, max_depth)) out.push_back(std::move(c));
    return out;
}

inline const std::vector<int>& pm() {
    static const std::vector<int> v{1, -1};
    return v;
}

inline std::vector<std::vector<int>> sign_vectors(std::size_t n) {
    std::vector<std::vector<int>> out;
    for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
        std::vector<int> s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = ((m >> i) & 1u) ? -1 : 1;
        out.push_back(s);
    }
    return out;
}

inline LogMomentCase log_case(const Params& p) {
    const std::string c = p.at("case").get<std::string>();
    for (auto v : {LogMomentCase::EE, LogMomentCase::EO, LogMomentCase::OE, LogMomentCase::OO})
        if (log_moment_case_name(v) == c) return v;
    throw DomainError("case must be one of ee, eo, oe, oo");
}

inline void positive(const Params& p, std::initializer_list<const char*> keys) {
    for (const char* k : keys)
        if (num(p, k) < 1) throw DomainError(std::string(k) + " must be positive");
}

inline Sides both(ApproxReal a, ApproxReal b) { return {std::move(a), std::move(b)}; }

}  // namespace registry_detail

/// The built-in identities, in the order `verify --all` runs them.
inline const std::vector<IdentityEntry>& identity_registry() {
    using namespace registry_detail;
    using P = Params;
    static const std::vector<IdentityEntry> entries = [] {
        std::vector<IdentityEntry> e;

        e.push_back({"KY-A2", "K-Y relation: ky_side(k, l) = ky_side(l, k)",
                     [](int W) {
                         std::vector<P> out;
                         const auto cs = compositions_upto(1, W - 2, 3);
                         for (const auto& k : cs)
                             for (const auto& l : cs)
                                 if (k < l && static_cast<int>(k.size() + l.size()) <= 4 &&
                                     std::accumulate(k.begin(), k.end(), 0) + std::accumulate(l.begin(), l.end(), 0) + 1 <= W)
                                     out.push_back({{"k", k}, {"l", l}});
                         return out;
                     },
                     [](const P& p, Context& c) { return ky_relation(comp(p, "k"), comp(p, "l"), c); }});

        auto a3_enum = [](int W) {
            std::vector<P> out;
            for (int k1 = 1; k1 <= W; ++k1)
                for (int k2 = 1; k2 <= W; ++k2)
                    for (int l = 1; k1 + k2 + l + 1 <= W; ++l) out.push_back({{"k1", k1}, {"k2", k2}, {"l1", l}});
            return out;
        };
        e.push_back({"KY-A3", "depth (2, 1) K-Y relation written out", a3_enum, [](const P& p, Context& c) {
                         positive(p, {"k1", "k2", "l1"});
                         return ky_a3(num(p, "k1"), num(p, "k2"), num(p, "l1"), false, c);
                     }});
        e.push_back({"KY-A4", "depth (2, 1) K-Y relation in star values", a3_enum, [](const P& p, Context& c) {
                         positive(p, {"k1", "k2", "l1"});
                         return ky_a4(num(p, "k1"), num(p, "k2"), num(p, "l1"), false, c);
                     }});

        e.push_back({"XI", "xi(k; s + 1) against its expansion",
                     [](int W) {
                         std::vector<P> out;
                         for (const auto& k : compositions_upto(1, W - 2, 2))
                             for (int s = 1; std::accumulate(k.begin(), k.end(), 0) + s + 1 <= W; ++s)
                                 out.push_back({{"k", k}, {"s", s}});
                         return out;
                     },
                     [](const P& p, Context& c) {
                         positive(p, {"s"});
                         return xi_expansion(comp(p, "k"), num(p, "s"), c);
                     }});

        e.push_back({"CZT", "log^{2m} relation between T_n, S_n sums and T values",
                     [](int W) {
                         std::vector<P> out;
                         for (int m = 1; 2 * m + 2 <= W; ++m)
                             for (const auto& k : compositions_upto(1, W - 2 * m - 1, 2))
                                 if (m == 1 || k.size() == 1) out.push_back({{"k", k}, {"m", m}});
                         return out;
                     },
                     [](const P& p, Context& c) {
                         positive(p, {"m"});
                         return czt(comp(p, "k"), num(p, "m"), c);
                     }});

        e.push_back({"CZTB", "log^{2m} relation for k = ({2}_{r-1}, k)",
                     [](int W) {
                         std::vector<P> out;
                         for (int r = 1; r <= 3; ++r)
                             for (int k = 1; k <= W; ++k)
                                 for (int m = 1; 2 * (r - 1) + k + 2 * m + 1 <= W; ++m)
                                     if (m == 1 || r == 1) out.push_back({{"r", r}, {"k", k}, {"m", m}});
                         return out;
                     },
                     [](const P& p, Context& c) {
                         positive(p, {"r", "k", "m"});
                         return cztb(num(p, "r"), num(p, "k"), num(p, "m"), c);
                     }});

        e.push_back({"S2T", "S(1, k + l) through depth-one T values, T(1) = 2 log 2",
                     [](int W) {
                         std::vector<P> out;
                         for (int k = 1; k <= W; ++k)
                             for (int l = 1; k + l + 1 <= W; ++l) out.push_back({{"k", k}, {"l", l}});
                         return out;
                     },
                     [](const P& p, Context& c) {
                         positive(p, {"k", "l"});
                         return s2t(num(p, "k"), num(p, "l"), c);
                     }});
        e.push_back({"S2T-ODD", "S(1, 2p + 1) in closed form",
                     [](int W) {
                         std::vector<P> out;
                         for (int q = 1; 2 * q + 2 <= W; ++q) out.push_back({{"p", q}});
                         return out;
                     },
                     [](const P& p, Context& c) {
                         positive(p, {"p"});
                         return s2t_odd(num(p, "p"), c);
                     }});

        e.push_back({"TT2", "convoluted T value of ((k1, k2), (1, l))",
                     [](int W) {
                         std::vector<P> out;
                         for (int k1 = 1; k1 <= W; ++k1)
                             for (int k2 = 1; k2 <= W; ++k2)
                                 for (int l = 1; k1 + k2 + l + 1 <= W; ++l) out.push_back({{"k1", k1}, {"k2", k2}, {"l", l}});
                         return out;
                     },
                     [](const P& p, Context& c) {
                         positive(p, {"k1", "k2", "l"});
                         return tt2(num(p, "k1"), num(p, "k2"), num(p, "l"), c);
                     }});

        e.push_back({"TT3", "antisymmetric combination of depth-three convoluted T values",
                     [](int W) {
                         std::vector<P> out;
                         for (int k1 = 1; k1 <= W; ++k1)
                             for (int k2 = 1; k2 <= W; ++k2)
                                 for (int l1 = 1; l1 <= W; ++l1)
                                     for (int l2 = 1; k1 + k2 + l1 + l2 + 1 <= W; ++l2)
                                         out.push_back({{"k1", k1}, {"k2", k2}, {"l1", l1}, {"l2", l2}});
                         return out;
                     },
                     [](const P& p, Context& c) {
                         positive(p, {"k1", "k2", "l1", "l2"});
                         return tt3(num(p, "k1"), num(p, "k2"), num(p, "l1"), num(p, "l2"), c);
                     }});

        e.push_back({"ALT-DEPTH1", "product of two depth-one lambda values",
                     [](int W) {
                         std::vector<P> out;
                         for (int k = 1; k <= W; ++k)
                             for (int l = 1; k + l + 1 <= W; ++l)
                                 for (int s : pm())
                                     for (int t : pm()) out.push_back({{"k", k}, {"l", l}, {"sigma", s}, {"eps", t}});
                         return out;
                     },
                     [](const P& p, Context& c) {
                         positive(p, {"k", "l"});
                         return alt_depth1(num(p, "k"), num(p, "l"), sign(p, "sigma"), sign(p, "eps"), c);
                     }});

        auto c7_enum = [](int W) {
            std::vector<P> out;
            for (int k1 = 1; k1 <= W; ++k1)
                for (int k2 = 1; k2 <= W; ++k2)
                    for (int l = 1; k1 + k2 + l + 1 <= W; ++l)
                        for (const auto& s : sign_vectors(3))
                            out.push_back({{"k1", k1}, {"k2", k2}, {"l", l}, {"sigma1", s[0]}, {"sigma2", s[1]}, {"eps", s[2]}});
            return out;
        };
        e.push_back({"ALT-C7", "alternating convoluted relation with (1, l; eps, eps)", c7_enum, [](const P& p, Context& c) {
                         positive(p, {"k1", "k2", "l"});
                         return alt_c7(num(p, "k1"), num(p, "k2"), num(p, "l"), sign(p, "sigma1"), sign(p, "sigma2"), sign(p, "eps"), c);
                     }});
        e.push_back({"ALT-C8", "the same relation in star values", c7_enum, [](const P& p, Context& c) {
                         positive(p, {"k1", "k2", "l"});
                         return alt_c8(num(p, "k1"), num(p, "k2"), num(p, "l"), sign(p, "sigma1"), sign(p, "sigma2"), sign(p, "eps"), c);
                     }});

        e.push_back({"ALT-NUM", "star values at (2-, 1-, 4-) and (1-, 2-, 4-) against Li_4(1/2), pi, zeta, log 2",
                     [](int) { return std::vector<P>{P::object()}; },
                     [](const P&, Context& c) { return alt_num(c); }});

        auto dual_enum = [](int W) {
            std::vector<P> out;
            const auto cs = compositions_upto(1, W - 2, 2);
            for (const auto& k : cs)
                for (const auto& l : cs)
                    for (int p = 2; std::accumulate(k.begin(), k.end(), 0) + std::accumulate(l.begin(), l.end(), 0) + p - 1 <= W; ++p)
                        if (k.back() + p - 1 >= 2 && l.back() + p - 1 >= 2 && k.back() + l.back() + p - 1 >= 2)
                            out.push_back({{"k", k}, {"l", l}, {"p", p}});
            return out;
        };
        e.push_back({"DUAL-L", "duality for the Li-Li integral", dual_enum, [](const P& p, Context& c) {
                         positive(p, {"p"});
                         return dual_L(comp(p, "k"), comp(p, "l"), num(p, "p"), c);
                     }});
        e.push_back({"DUAL-A", "duality for the A-A integral", dual_enum, [](const P& p, Context& c) {
                         positive(p, {"p"});
                         return dual_A(comp(p, "k"), comp(p, "l"), num(p, "p"), c);
                     }});

        auto xid_enum = [](int W) {
            std::vector<P> out;
            for (int r = 1; r <= W; ++r)
                for (int s = 1; s <= W; ++s)
                    for (int p = 2; r + s + p <= W; ++p) out.push_back({{"r", r}, {"s", s}, {"p", p}});
            return out;
        };
        e.push_back({"XI-DUAL", "duality for xi at ({1}_{r-1}, p)", xid_enum, [](const P& p, Context& c) {
                         positive(p, {"r", "s", "p"});
                         return xi_dual(num(p, "r"), num(p, "s"), num(p, "p"), c);
                     }});
        e.push_back({"PSI-DUAL", "duality for psi at ({1}_{r-1}, p)", xid_enum, [](const P& p, Context& c) {
                         positive(p, {"r", "s", "p"});
                         return psi_dual(num(p, "r"), num(p, "s"), num(p, "p"), c);
                     }});

        e.push_back({"POSET-522", "weight-five relation from the zig-zag poset of ((1, 1); (2, 1))",
                     [](int W) {
                         std::vector<P> out;
                         if (W < 5) return out;
                         for (const char* form : {"special", "general"})
                             for (int s1 : pm())
                                 for (int s2 : pm()) {
                                     if (std::string(form) == "special" && !(s1 == 1)) continue;
                                     out.push_back({{"form", form}, {"sigma1", s1}, {"sigma2", s2}});
                                 }
                         return out;
                     },
                     [](const P& p, Context& c) {
                         const int s1 = sign(p, "sigma1"), s2 = sign(p, "sigma2");
                         if (p.value("form", std::string("general")) == "special") {
                             if (s1 != 1) throw DomainError("POSET-522 special forms exist for (1, 1) and (1, -1) only");
                             return poset522_special(s2 < 0, c);
                         }
                         return poset522(s1, s2, c);
                     }});

        e.push_back({"KY-POSET", "zig-zag poset integral against the alternating K-Y value",
                     [](int W) {
                         std::vector<P> out;
                         const auto cs = compositions_upto(1, W - 1, 2);
                         for (const auto& k : cs)
                             for (const auto& l : cs) {
                                 const int w = std::accumulate(k.begin(), k.end(), 0) + std::accumulate(l.begin(), l.end(), 0);
                                 if (w > std::min(W, 5)) continue;
                                 for (const auto& s : sign_vectors(k.size()))
                                     if (!(k.back() + l.back() < 2)) out.push_back({{"k", k}, {"sigma", s}, {"l", l}});
                             }
                         return out;
                     },
                     [](const P& p, Context& c) { return ky_poset_relation(comp(p, "k"), signs(p, "sigma"), comp(p, "l"), c); }});

        e.push_back({"T-FINAL", "L, T and t* values against a zeta_{n-1}(k1) T_n(1) series",
                     [](int W) {
                         std::vector<P> out;
                         for (int k1 = 1; k1 <= W; ++k1)
                             for (int k2 = 1; k2 <= W; ++k2)
                                 for (int l = 1; k1 + k2 + l + 1 <= W; ++l)
                                     if (k2 + l >= 2) out.push_back({{"k1", k1}, {"k2", k2}, {"l", l}});
                         return out;
                     },
                     [](const P& p, Context& c) {
                         positive(p, {"k1", "k2", "l"});
                         return t_final(num(p, "k1"), num(p, "k2"), num(p, "l"), c);
                     }});

        e.push_back({"L1111", "int L({1}_r; x)/x^2 dx: exponential extraction (r <= 4) and displays (r <= 3)",
                     [](int W) {
                         std::vector<P> out;
                         for (int r = 1; r <= std::min(4, W); ++r) {
                             out.push_back({{"r", r}, {"form", "extraction"}});
                             if (r <= 3) out.push_back({{"r", r}, {"form", "display"}});
                         }
                         return out;
                     },
                     [](const P& p, Context& c) {
                         const int r = num(p, "r");
                         if (r < 1 || r > 12) throw DomainError("r must be in 1..12");
                         const ApproxReal oracle = l_ones_over_x2_oracle(r, c);
                         if (p.value("form", std::string("extraction")) == "display")
                             return both(l_ones_over_x2_display(r).evaluate(), oracle);
                         return both(l_ones_over_x2_symbolic(static_cast<std::size_t>(r))[static_cast<std::size_t>(r)].evaluate(), oracle);
                     }});

        e.push_back({"AONES", "int A({1}_r; x) dx = -2^{1-r} zeta(r bar) as stated, against term-wise integration",
                     [](int W) {
                         std::vector<P> out;
                         for (int r = 1; r <= std::min(6, W); ++r) out.push_back({{"r", r}});
                         return out;
                     },
                     [](const P& p, Context& c) {
                         positive(p, {"r"});
                         return both(aones_stated(num(p, "r")), aones_oracle(num(p, "r"), c));
                     }});

        e.push_back({"CORII", "log-power moments of (1-t)/(1+t) in bar zeta, T_n, S_n against quadrature",
                     [](int W) {
                         std::vector<P> out;
                         for (auto cs : {LogMomentCase::EE, LogMomentCase::EO, LogMomentCase::OE, LogMomentCase::OO})
                             for (int n = 1; n <= 3; ++n)
                                 for (int m = 1; m <= 3 && 2 * m <= W; ++m)
                                     out.push_back({{"case", log_moment_case_name(cs)}, {"n", n}, {"m", m}});
                         return out;
                     },
                     [](const P& p, Context&) {
                         positive(p, {"n", "m"});
                         const LogMomentCase cs = log_case(p);
                         const bool corrected = p.value("corrected", false);
                         return both(corii_closed(cs, num(p, "n"), num(p, "m"), corrected), corii_quadrature(cs, num(p, "n"), num(p, "m")));
                     }});

        e.push_back({"LI-MOMENT", "int x^{n-1} Li_k(x) dx: explicit expansion against term-wise integration",
                     [](int W) {
                         std::vector<P> out;
                         for (const auto& k : compositions_upto(1, W, 4))
                             for (int n = 1; n <= 4; ++n) out.push_back({{"k", k}, {"n", n}});
                         return out;
                     },
                     [](const P& p, Context& c) {
                         positive(p, {"n"});
                         return both(li_moment_closed(comp(p, "k"), num(p, "n"), c), li_moment_oracle(comp(p, "k"), num(p, "n"), c));
                     }});

        e.push_back({"LOG-MOMENT", "int x^{n-1} log^r(1-x) dx = (-1)^r r! zeta*_n({1}_r)/n against quadrature",
                     [](int W) {
                         std::vector<P> out;
                         for (int r = 1; r <= std::min(3, W); ++r)
                             for (int n = 1; n <= 3; ++n) out.push_back({{"r", r}, {"n", n}});
                         return out;
                     },
                     [](const P& p, Context&) {
                         positive(p, {"r", "n"});
                         return both(log_moment_closed(num(p, "r"), num(p, "n")), log_moment_quadrature(num(p, "r"), num(p, "n")));
                     }});

        e.push_back({"T-INT", "int t(1, 1; x) dx and int L(k, 1; x)/x^2 dx in closed form against term-wise integration",
                     [](int W) {
                         std::vector<P> out;
                         if (W >= 2) out.push_back({{"form", "t11"}});
                         for (int k = 1; k + 1 <= W && k <= 5; ++k) out.push_back({{"form", "Lx2"}, {"k", k}});
                         for (int k = 1; k + 1 <= W && k <= 5; ++k) out.push_back({{"form", "tx2"}, {"k", k}});
                         return out;
                     },
                     [](const P& p, Context& c) {
                         const std::string form = p.at("form").get<std::string>();
                         if (form == "t11") return both(t_one_integral_depth1(1, c), t_moment_oracle_raw({1, 1}, 0, c));
                         positive(p, {"k"});
                         const int k = num(p, "k");
                         if (form == "Lx2") return both(l_one_over_x2_depth1(k, c).first, l_moment_oracle_raw({k, 1}, -2, c));
                         if (form == "tx2") return both(l_one_over_x2_depth1(k, c).second, t_moment_oracle_raw({k, 1}, -2, c));
                         throw DomainError("form must be t11, Lx2 or tx2");
                     }});

        e.push_back({"A-MOMENT", "moments of A(k; x): explicit expansion against term-wise integration",
                     [](int W) {
                         std::vector<P> out;
                         for (const auto& k : compositions_upto(1, std::min(W, 5), 3))
                             for (int n = 1; n <= 2; ++n)
                                 for (bool odd : {false, true}) out.push_back({{"k", k}, {"n", n}, {"odd_power", odd}});
                         return out;
                     },
                     [](const P& p, Context& c) {
                         positive(p, {"n"});
                         const Composition k = comp(p, "k");
                         const bool odd = p.value("odd_power", false);
                         return both(a_moment_closed(k, num(p, "n"), odd, c), a_moment_oracle(k, num(p, "n"), odd, c));
                     }});

        e.push_back({"LAMBDA-MOMENT", "int x^{n-1} lambda_k(sigma x) dx: explicit expansion against term-wise integration",
                     [](int W) {
                         std::vector<P> out;
                         for (const auto& k : compositions_upto(1, std::min(W, 5), 3))
                             for (const auto& s : sign_vectors(k.size())) {
                                 if (k.front() == 1 && s.front() == 1) continue;
                                 for (int n = 1; n <= 3; ++n) out.push_back({{"k", k}, {"sigma", s}, {"n", n}});
                             }
                         return out;
                     },
                     [](const P& p, Context& c) {
                         positive(p, {"n"});
                         return both(lambda_moment_closed(comp(p, "k"), signs(p, "sigma"), num(p, "n"), false, c),
                                     lambda_moment_oracle(comp(p, "k"), signs(p, "sigma"), num(p, "n"), c));
                     }});

        e.push_back({"L-MOMENT", "int x^{2n-2} L(k; x) dx: explicit expansion against term-wise integration",
                     [](int W) {
                         std::vector<P> out;
                         for (const auto& k : compositions_upto(1, std::min(W, 5), 3))
                             for (int n = 1; n <= 3; ++n) out.push_back({{"k", k}, {"n", n}});
                         return out;
                     },
                     [](const P& p, Context& c) {
                         positive(p, {"n"});
                         return both(l_moment_closed(comp(p, "k"), num(p, "n"), c), l_moment_oracle(comp(p, "k"), num(p, "n"), c));
                     }});

        e.push_back({"T-MOMENT", "int x^{2n-2} t(k; x) dx: explicit expansion against term-wise integration",
                     [](int W) {
                         std::vector<P> out;
                         for (const auto& k : compositions_upto(1, std::min(W, 5), 3))
                             for (int n = 1; n <= 3; ++n) out.push_back({{"k", k}, {"n", n}});
                         return out;
                     },
                     [](const P& p, Context& c) {
                         positive(p, {"n"});
                         return both(t_moment_closed(comp(p, "k"), num(p, "n"), c), t_moment_oracle(comp(p, "k"), num(p, "n"), c));
                     }});
        return e;
    }();
    return entries;
}

inline const IdentityEntry& find_identity(const std::string& id) {
    for (const auto& e : identity_registry())
        if (e.id == id) return e;
    throw UnknownIdentity("unknown identity: " + id);
}

/// Evaluates one instance. DomainError propagates (parameters outside the hypotheses).
inline IdentityReport verify_identity(const IdentityEntry& entry, const Params& params, double tol, Context& ctx) {
    PrecisionGuard guard(ctx.opts.bits);
    IdentityReport r;
    r.id = entry.id;
    r.params = params;
    r.tol = tol;
    Sides s = entry.evaluate(params, ctx);
    r.lhs = s.first;
    r.rhs = s.second;
    r.diff = s.first - s.second;
    const double d = std::abs(r.diff.value.to_double());
    r.pass = d <= tol && r.diff.radius <= tol && std::isfinite(d);
    return r;
}

struct VerifyJob {
    const IdentityEntry* entry;
    Params params;
};

/// Runs jobs on `threads` workers; results keep job order. Any exception is
/// recorded as a failed report.
inline std::vector<IdentityReport> run_jobs(const std::vector<VerifyJob>& jobs, double tol, Context& ctx, unsigned threads = 1) {
    std::vector<IdentityReport> out(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            try {
                out[i] = verify_identity(*jobs[i].entry, jobs[i].params, tol, ctx);
            } catch (const std::exception& e) {
                out[i].id = jobs[i].entry->id;
                out[i].params = jobs[i].params;
                out[i].tol = tol;
                out[i].pass = false;
                out[i].error = e.what();
            }
        }
    };
    threads = std::max(1u, threads);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

/// All instances of the given entries up to max_weight.
inline std::vector<VerifyJob> enumerate_jobs(const std::vector<const IdentityEntry*>& entries, int max_weight) {
    std::vector<VerifyJob> jobs;
    for (const IdentityEntry* e : entries)
        for (auto& p : e->enumerate(max_weight)) jobs.push_back({e, std::move(p)});
    return jobs;
}

}  // namespace mzv

#endif  // MZV_REGISTRY_HPP
