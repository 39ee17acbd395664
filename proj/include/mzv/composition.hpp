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

#ifndef MZV_COMPOSITION_HPP
#define MZV_COMPOSITION_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mzv {

/// Thrown for malformed textual input (compositions, JSON documents).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a value is requested outside its domain of convergence.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A finite sequence of positive integers with one sign per entry.
///
/// A barred entry (alternating sign) is stored as sign -1. The empty
/// composition is a valid value of weight and depth 0.
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<int> parts) : parts_(parts), signs_(parts.size(), 1) { check(); }
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)), signs_(parts_.size(), 1) { check(); }
    Composition(std::vector<int> parts, std::vector<int> signs) : parts_(std::move(parts)), signs_(std::move(signs)) {
        if (signs_.size() != parts_.size()) throw std::invalid_argument("composition: sign vector length mismatch");
        check();
    }

    /// Repeats `value` `count` times: {value}_count.
    static Composition repeat(int value, std::size_t count, int sign = 1) {
        return Composition(std::vector<int>(count, value), std::vector<int>(count, sign));
    }

    std::size_t depth() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    int operator[](std::size_t i) const { return parts_[i]; }
    int part(std::size_t i) const { return parts_.at(i); }
    int sign(std::size_t i) const { return signs_.at(i); }
    int last() const { return parts_.back(); }
    int last_sign() const { return signs_.back(); }

    std::span<const int> parts() const { return parts_; }
    std::span<const int> signs() const { return signs_; }

    bool has_signs() const {
        return std::any_of(signs_.begin(), signs_.end(), [](int s) { return s < 0; });
    }

    /// First `count` entries.
    Composition head(std::size_t count) const {
        count = std::min(count, depth());
        return Composition({parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(count)},
                           {signs_.begin(), signs_.begin() + static_cast<std::ptrdiff_t>(count)});
    }

    /// All entries but the last; empty stays empty.
    Composition init() const { return head(depth() == 0 ? 0 : depth() - 1); }

    Composition appended(int part, int sign = 1) const {
        Composition c = *this;
        c.parts_.push_back(part);
        c.signs_.push_back(sign);
        c.check();
        return c;
    }

    Composition prepended(int part, int sign = 1) const {
        Composition c = *this;
        c.parts_.insert(c.parts_.begin(), part);
        c.signs_.insert(c.signs_.begin(), sign);
        c.check();
        return c;
    }

    Composition concat(const Composition& o) const {
        Composition c = *this;
        c.parts_.insert(c.parts_.end(), o.parts_.begin(), o.parts_.end());
        c.signs_.insert(c.signs_.end(), o.signs_.begin(), o.signs_.end());
        return c;
    }

    /// Adds `n` to the last entry: (k_1,...,k_r + n).
    Composition plus_last(int n) const {
        if (empty()) throw std::invalid_argument("composition: plus_last on empty composition");
        Composition c = *this;
        c.parts_.back() += n;
        c.check();
        return c;
    }

    Composition with_signs(std::vector<int> signs) const { return Composition(parts_, std::move(signs)); }
    Composition unsigned_copy() const { return Composition(parts_); }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition& a, const Composition& b) {
        if (auto c = a.parts_ <=> b.parts_; c != 0) return c;
        return a.signs_ <=> b.signs_;
    }

    /// Text form: comma separated, '-' marks a barred entry. Empty prints "".
    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            if (signs_[i] < 0) out += '-';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

private:
    void check() const {
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("composition: parts must be positive");
        for (int s : signs_)
            if (s != 1 && s != -1) throw std::invalid_argument("composition: signs must be +1 or -1");
    }

    std::vector<int> parts_;
    std::vector<int> signs_;
};

/// Parses "1,-2, 3". Whitespace is ignored; the empty string is the empty composition.
inline Composition parse_composition(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty() || s == "()" || s == "{}") return {};
    if (s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    std::vector<int> parts, signs;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t comma = std::min(s.find(',', pos), s.size());
        std::string_view tok(s.data() + pos, comma - pos);
        if (tok.empty()) throw ParseError("composition: empty entry in '" + std::string(text) + "'");
        int sign = 1;
        if (tok.front() == '-') {
            sign = -1;
            tok.remove_prefix(1);
        }
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError("composition: bad entry '" + std::string(tok) + "'");
        if (tok.size() > 6) throw ParseError("composition: entry too large");
        const int v = std::stoi(std::string(tok));
        if (v < 1) throw ParseError("composition: entries must be positive");
        parts.push_back(v);
        signs.push_back(sign);
        pos = comma + 1;
        if (comma == s.size()) break;
    }
    return Composition(std::move(parts), std::move(signs));
}

inline int weight(const Composition& k) { return k.weight(); }

/// The slice k_i^j = (k_{i+1-j}, ..., k_i): the last j entries of the first i.
/// Yields the empty composition when j == 0 or i < j.
inline Composition slice_tail(const Composition& k, std::size_t i, std::size_t j) {
    if (i > k.depth()) throw std::out_of_range("slice_tail: i exceeds depth");
    if (j == 0 || i < j) return {};
    std::vector<int> parts, signs;
    for (std::size_t t = i - j; t < i; ++t) {
        parts.push_back(k.part(t));
        signs.push_back(k.sign(t));
    }
    return Composition(std::move(parts), std::move(signs));
}

enum class Admissibility { SeriesMZV, SeriesAlternating, SeriesLevelTwo };

/// MZV kind: last entry >= 2. Alternating kind: (k_r, eps_r) != (1, +1).
/// Level-two families (t, T, S, M) converge under the same k_r >= 2 rule.
/// The empty composition is admissible in every kind.
inline bool is_admissible(const Composition& k, Admissibility kind) {
    if (k.empty()) return true;
    switch (kind) {
        case Admissibility::SeriesAlternating: return !(k.last() == 1 && k.last_sign() == 1);
        case Admissibility::SeriesMZV:
        case Admissibility::SeriesLevelTwo: return k.last() >= 2;
    }
    return false;
}

}  // namespace mzv

#endif  // MZV_COMPOSITION_HPP
