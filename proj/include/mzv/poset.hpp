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

// Labeled posets and their iterated integrals.
//
// A poset X with labels in {0, 1} (level 1 or 2) or {-1, 0, 1} (level 3)
// stands for the integral over 0 < t_x < 1 ordered like X of the product of
// one form per node:
//
//   label 0  -> dt/t
//   label 1  -> dt/(1-t)          (level 1, 3)   or  2dt/(1-t^2)  (level 2)
//   label -1 -> dt/(1+t)          (level 3)
//
// The integral is the sum over linear extensions of totally ordered words.
// A word read bottom to top, split at its nonzero letters sigma_j into blocks
// sigma_j 0^{k_j - 1}, equals lambda_k(sigma) / prod sigma_j, which is the
// alternating value zeta(k; sigma_1 sigma_2, ..., sigma_{r-1} sigma_r, sigma_r)
// divided by prod sigma_j. The level-two form is the sum of the +1 and -1
// level-three forms.

#ifndef MZV_POSET_HPP
#define MZV_POSET_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mzv/approx_real.hpp"
#include "mzv/composition.hpp"
#include "mzv/rational.hpp"
#include "mzv/values.hpp"

namespace mzv {

class PosetError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Letters bottom to top, in the alphabet of `level`.
struct IntegralWord {
    int level = 1;
    std::vector<int> letters;

    friend bool operator<(const IntegralWord& a, const IntegralWord& b) {
        return std::tie(a.level, a.letters) < std::tie(b.level, b.letters);
    }
    friend bool operator==(const IntegralWord&, const IntegralWord&) = default;

    std::string str() const {
        std::string out;
        for (int c : letters) out += c == 0 ? 'o' : (c > 0 ? (level == 2 ? 'y' : 'x') : 'z');
        return out;
    }
};

/// Finite poset on nodes 0..n-1 given by cover relations lower < upper.
class LabeledPoset {
public:
    static constexpr std::size_t kMaxNodes = 63;

    LabeledPoset() = default;
    LabeledPoset(int level, std::vector<int> labels, std::vector<std::pair<int, int>> covers)
        : level_(level), labels_(std::move(labels)), covers_(std::move(covers)) {
        validate();
        close();
    }

    int level() const { return level_; }
    std::size_t size() const { return labels_.size(); }
    const std::vector<int>& labels() const { return labels_; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    /// Bitmask of nodes strictly below node i.
    std::uint64_t below(std::size_t i) const { return below_[i]; }
    bool less(std::size_t a, std::size_t b) const { return (below_[b] >> a) & 1u; }
    bool comparable(std::size_t a, std::size_t b) const { return a == b || less(a, b) || less(b, a); }

    bool is_maximal(std::size_t i) const {
        for (std::size_t j = 0; j < size(); ++j)
            if (less(i, j)) return false;
        return true;
    }
    bool is_minimal(std::size_t i) const { return below_[i] == 0; }

    /// Maximal nodes carry no dt/(1-t) form and minimal nodes no dt/t form.
    bool admissible() const {
        if (size() == 0) return false;
        for (std::size_t i = 0; i < size(); ++i) {
            if (is_maximal(i) && labels_[i] == 1) return false;
            if (is_minimal(i) && labels_[i] == 0) return false;
        }
        return true;
    }

    /// Copy with the extra relation a < b.
    LabeledPoset with_relation(int a, int b) const {
        auto c = covers_;
        c.emplace_back(a, b);
        return LabeledPoset(level_, labels_, std::move(c));
    }

    /// Number of nodes; kept for symmetry with the JSON form.
    nlohmann::json to_json() const {
        nlohmann::json j;
        j["level"] = level_;
        j["labels"] = labels_;
        j["covers"] = nlohmann::json::array();
        for (auto [a, b] : covers_) j["covers"].push_back({a, b});
        return j;
    }

    /// Accepts {level, labels: [..], covers} with nodes 0..n-1, or
    /// {level, nodes: [id..], labels: {id: label}, covers} with arbitrary ids.
    static LabeledPoset from_json(const nlohmann::json& j) {
        try {
            const int level = j.at("level").get<int>();
            std::vector<int> labels;
            std::map<std::string, int> index;
            auto id_of = [](const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
            if (j.contains("nodes")) {
                const auto& lab = j.at("labels");
                if (!lab.is_object()) throw PosetError("poset: labels must map node ids to -1, 0 or 1");
                for (const auto& n : j.at("nodes")) {
                    const std::string id = id_of(n);
                    if (!index.emplace(id, static_cast<int>(labels.size())).second) throw PosetError("poset: duplicate node " + id);
                    if (!lab.contains(id)) throw PosetError("poset: node " + id + " has no label");
                    labels.push_back(lab.at(id).get<int>());
                }
            } else {
                labels = j.at("labels").get<std::vector<int>>();
            }
            auto node = [&](const nlohmann::json& v) {
                if (index.empty()) return v.get<int>();
                auto it = index.find(id_of(v));
                if (it == index.end()) throw PosetError("poset: cover names unknown node " + id_of(v));
                return it->second;
            };
            std::vector<std::pair<int, int>> covers;
            for (const auto& e : j.at("covers")) {
                if (!e.is_array() || e.size() != 2) throw PosetError("poset: each cover must be [lower, upper]");
                covers.emplace_back(node(e[0]), node(e[1]));
            }
            return LabeledPoset(level, std::move(labels), std::move(covers));
        } catch (const nlohmann::json::exception& e) {
            throw PosetError(std::string("poset json: ") + e.what());
        }
    }

private:
    void validate() const {
        if (level_ < 1 || level_ > 3) throw PosetError("poset: level must be 1, 2 or 3");
        if (labels_.size() > kMaxNodes) throw PosetError("poset: too many nodes");
        for (int l : labels_) {
            if (l != 0 && l != 1 && !(l == -1 && level_ == 3))
                throw PosetError("poset: label " + std::to_string(l) + " not allowed at level " + std::to_string(level_));
        }
        for (auto [a, b] : covers_) {
            if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= labels_.size() ||
                static_cast<std::size_t>(b) >= labels_.size() || a == b)
                throw PosetError("poset: bad cover relation");
        }
    }

    void close() {
        const std::size_t n = labels_.size();
        below_.assign(n, 0);
        for (auto [a, b] : covers_) below_[b] |= std::uint64_t{1} << a;
        // Transitive closure by repeated propagation; n <= 63.
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t m = below_[i];
                for (std::size_t j = 0; j < n; ++j)
                    if ((below_[i] >> j) & 1u) m |= below_[j];
                if (m != below_[i]) {
                    below_[i] = m;
                    changed = true;
                }
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            if ((below_[i] >> i) & 1u) throw PosetError("poset: relations contain a cycle");
    }

    int level_ = 1;
    std::vector<int> labels_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::uint64_t> below_;
};

using WordMultiset = std::map<IntegralWord, long>;

/// Words of all linear extensions with multiplicity, memoised on down-sets.
inline WordMultiset linear_extension_words(const LabeledPoset& p) {
    const std::size_t n = p.size();
    if (n > 40) throw PosetError("poset: too many nodes to enumerate");
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    // memo[mask] = words of the nodes outside mask, as suffixes.
    std::unordered_map<std::uint64_t, std::map<std::vector<int>, long>> memo;
    auto rec = [&](auto&& self, std::uint64_t mask) -> const std::map<std::vector<int>, long>& {
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        std::map<std::vector<int>, long> out;
        if (mask == full) {
            out[{}] = 1;
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                if ((mask >> i) & 1u) continue;
                if ((p.below(i) & ~mask) != 0) continue;
                for (const auto& [w, c] : self(self, mask | (std::uint64_t{1} << i))) {
                    std::vector<int> v;
                    v.reserve(w.size() + 1);
                    v.push_back(p.labels()[i]);
                    v.insert(v.end(), w.begin(), w.end());
                    out[v] += c;
                }
            }
        }
        return memo.emplace(mask, std::move(out)).first->second;
    };
    WordMultiset result;
    for (const auto& [w, c] : rec(rec, 0)) result[IntegralWord{p.level(), w}] += c;
    return result;
}

/// The same multiset by repeatedly splitting an incomparable pair a, b into
/// X + (a < b) and X + (b < a) until every poset is a chain.
inline WordMultiset shuffle_words(const LabeledPoset& p) {
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b)
            if (!p.comparable(a, b)) {
                WordMultiset left = shuffle_words(p.with_relation(static_cast<int>(a), static_cast<int>(b)));
                for (const auto& [w, c] : shuffle_words(p.with_relation(static_cast<int>(b), static_cast<int>(a))))
                    left[w] += c;
                return left;
            }
    std::vector<std::size_t> order(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return p.less(x, y); });
    IntegralWord w{p.level(), {}};
    for (std::size_t i : order) w.letters.push_back(p.labels()[i]);
    return {{w, 1}};
}

/// Formal rational combination of alternating values zeta(k; eps).
class RationalCombo {
public:
    void add(const Composition& k, const Rational& c) {
        Rational& slot = terms_[k];
        slot += c;
        if (slot == 0) terms_.erase(k);
    }
    void add(const RationalCombo& o, const Rational& scale = 1) {
        for (const auto& [k, c] : o.terms_) add(k, c * scale);
    }
    const std::map<Composition, Rational>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    ApproxReal evaluate(Context& ctx = default_context()) const {
        ApproxReal sum(0L);
        for (const auto& [k, c] : terms_) sum += zeta(k, ctx) * c;
        return sum;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : terms_) {
            std::string cs = c.get_str();
            if (!out.empty()) out += cs.front() == '-' ? " - " : " + ";
            else if (cs.front() == '-') out += "-";
            if (cs.front() == '-') cs.erase(0, 1);
            out += cs + "*zeta(" + k.str() + ")";
        }
        return out;
    }

private:
    std::map<Composition, Rational> terms_;
};

/// Expands an admissible word into alternating values. Level-two letters 1
/// become the sum of the level-three letters 1 and -1.
inline RationalCombo word_combo(const IntegralWord& w) {
    if (w.letters.empty()) throw PosetError("word: empty");
    if (w.letters.front() == 0) throw DomainError("word " + w.str() + ": starts with dt/t");
    if (w.letters.back() == 1 && w.level != 2) throw DomainError("word " + w.str() + ": ends with dt/(1-t)");
    if (w.letters.back() != 0 && w.level == 2) throw DomainError("word " + w.str() + ": ends with a level-two form");
    std::vector<int> parts;
    std::vector<std::size_t> pos;  // positions of the nonzero letters
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (w.letters[i] != 0) {
            parts.push_back(1);
            pos.push_back(i);
        } else {
            ++parts.back();
        }
    }
    RationalCombo out;
    const std::size_t r = parts.size();
    const std::size_t variants = w.level == 2 ? (std::size_t{1} << r) : 1;
    for (std::size_t v = 0; v < variants; ++v) {
        std::vector<int> sigma(r);
        for (std::size_t j = 0; j < r; ++j)
            sigma[j] = w.level == 2 ? (((v >> j) & 1u) ? -1 : 1) : w.letters[pos[j]];
        int prod = 1;
        for (int s : sigma) prod *= s;
        out.add(Composition(parts, lambda_signs(sigma)), Rational(prod));
    }
    return out;
}

/// The empty poset integrates to 1.
inline RationalCombo poset_combo(const LabeledPoset& p) {
    RationalCombo out;
    if (p.size() == 0) {
        out.add(Composition{}, Rational(1));
        return out;
    }
    if (!p.admissible()) throw DomainError("poset: not admissible");
    for (const auto& [w, c] : linear_extension_words(p)) out.add(word_combo(w), Rational(c));
    return out;
}

inline ApproxReal word_value(const IntegralWord& w, Context& ctx = default_context()) {
    return word_combo(w).evaluate(ctx);
}

inline ApproxReal evaluate_poset(const LabeledPoset& p, Context& ctx = default_context()) {
    return poset_combo(p).evaluate(ctx);
}

namespace detail {

/// Appends the chain sigma_1 0^{k_1-1} ... sigma_r 0^{k_r-1}; returns (bottom, top) or (-1, -1).
inline std::pair<int, int> append_chain(std::vector<int>& labels, std::vector<std::pair<int, int>>& covers,
                                        const Composition& k, const std::vector<int>& sigma) {
    int bottom = -1, prev = -1;
    for (std::size_t j = 0; j < k.depth(); ++j) {
        for (int e = 0; e < k.part(j); ++e) {
            const int id = static_cast<int>(labels.size());
            labels.push_back(e == 0 ? (sigma.empty() ? 1 : sigma[j]) : 0);
            if (prev >= 0) covers.emplace_back(prev, id);
            if (bottom < 0) bottom = id;
            prev = id;
        }
    }
    return {bottom, prev};
}

inline void check_signs(const Composition& k, const std::vector<int>& sigma, int level) {
    if (!sigma.empty() && sigma.size() != k.depth()) throw PosetError("poset: one label per entry required");
    for (int s : sigma)
        if (s != 1 && !(s == -1 && level == 3)) throw PosetError("poset: bad node label");
}

}  // namespace detail

/// Totally ordered poset of the word for k; its integral is the k-th value of the level.
inline LabeledPoset chain_poset(const Composition& k, int level, const std::vector<int>& sigma = {}) {
    detail::check_signs(k, sigma, level);
    std::vector<int> labels;
    std::vector<std::pair<int, int>> covers;
    detail::append_chain(labels, covers, k, sigma);
    return LabeledPoset(level, std::move(labels), std::move(covers));
}

/// Two chains below a common top dt/t node: int_0^1 F(k; x) F(l; x) dx / x.
inline LabeledPoset product_poset(const Composition& k, const Composition& l, int level,
                                  const std::vector<int>& sigma = {}, const std::vector<int>& eps = {}) {
    detail::check_signs(k, sigma, level);
    detail::check_signs(l, eps, level);
    std::vector<int> labels;
    std::vector<std::pair<int, int>> covers;
    auto [kb, kt] = detail::append_chain(labels, covers, k, sigma);
    auto [lb, lt] = detail::append_chain(labels, covers, l, eps);
    const int top = static_cast<int>(labels.size());
    labels.push_back(0);
    if (kt >= 0) covers.emplace_back(kt, top);
    if (lt >= 0) covers.emplace_back(lt, top);
    return LabeledPoset(level, std::move(labels), std::move(covers));
}

/// Node labels sigma'_j = sigma_j ... sigma_r for the convoluted poset.
inline std::vector<int> suffix_products(const std::vector<int>& sigma) {
    std::vector<int> out(sigma.size());
    int p = 1;
    for (std::size_t j = sigma.size(); j-- > 0;) {
        p *= sigma[j];
        out[j] = p;
    }
    return out;
}

/// Zig-zag poset of zeta((k; sigma) * l*).
///
/// A chain sigma'_1 0^{k_1-1} ... sigma'_r 0^{k_r-1} 0^{l_s} is followed by the
/// blocks 1 0^{l_j - 1}, j = s-1 .. 1; the bottom of each block lies below the
/// top of the block before it. The integral is zeta((k; sigma) * l*) / prod sigma'.
inline LabeledPoset ky_poset(const Composition& k, const std::vector<int>& sigma, const Composition& l) {
    if (k.empty() || l.empty()) throw PosetError("ky_poset: both indices must be nonempty");
    const bool signed_k = !sigma.empty();
    const int level = signed_k ? 3 : 1;
    detail::check_signs(k, sigma, level);
    std::vector<int> labels;
    std::vector<std::pair<int, int>> covers;
    auto [mb, mt] = detail::append_chain(labels, covers, k, signed_k ? suffix_products(sigma) : std::vector<int>{});
    int prev_top = mt;
    for (int e = 0; e < l.last(); ++e) {
        const int id = static_cast<int>(labels.size());
        labels.push_back(0);
        covers.emplace_back(prev_top, id);
        prev_top = id;
    }
    for (std::size_t j = l.depth() - 1; j-- > 0;) {
        auto [bb, bt] = detail::append_chain(labels, covers, Composition{l.part(j)}, {});
        covers.emplace_back(bb, prev_top);
        prev_top = bt;
    }
    return LabeledPoset(level, std::move(labels), std::move(covers));
}

/// psi(k; s) = int_0^1 A({1}_{s-1}; x) A(k; x) dx / x through the level-two product poset.
inline ApproxReal psi_value(const Composition& k, int s, Context& ctx = default_context()) {
    if (s < 1) throw DomainError("psi: s must be at least 1");
    if (k.empty()) throw DomainError("psi: k must be nonempty");
    return evaluate_poset(product_poset(Composition::repeat(1, static_cast<std::size_t>(s - 1)), k.unsigned_copy(), 2),
                          ctx);
}

/// I_L(k; l) = int_0^1 Li_k(x) Li_l(x) dx / x.
inline ApproxReal int_LL(const Composition& k, const Composition& l, Context& ctx = default_context()) {
    return evaluate_poset(product_poset(k.unsigned_copy(), l.unsigned_copy(), 1), ctx);
}

/// I_A(k; l) = int_0^1 A(k; x) A(l; x) dx / x.
inline ApproxReal int_AA(const Composition& k, const Composition& l, Context& ctx = default_context()) {
    return evaluate_poset(product_poset(k.unsigned_copy(), l.unsigned_copy(), 2), ctx);
}

}  // namespace mzv

#endif  // MZV_POSET_HPP
