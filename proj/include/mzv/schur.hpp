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

// Schur multiple zeta values modulo N on skew Young diagrams.
//
// A filling M of the diagram is semistandard when rows weakly increase to the
// right and columns strictly increase downward (English notation, rows and
// columns numbered from 1). Modulo N each box also fixes the residue of its
// entry. The truncated value sums N^{#boxes} / prod m_ij^{s_ij} over such
// fillings with every entry <= a bound; for N = 1 it is the plain Schur MZV.

#ifndef MZV_SCHUR_HPP
#define MZV_SCHUR_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "mzv/composition.hpp"
#include "mzv/convolution.hpp"
#include "mzv/nested_sum.hpp"
#include "mzv/rational.hpp"

namespace mzv {

class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SchurCell {
    int row = 1;
    int col = 1;
    int exponent = 1;
    int residue = 0;  ///< entry = residue mod N
};

class SchurDiagram {
public:
    SchurDiagram() = default;
    SchurDiagram(int modulus, std::vector<SchurCell> cells) : modulus_(modulus), cells_(std::move(cells)) {
        validate();
    }

    int modulus() const { return modulus_; }
    const std::vector<SchurCell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }

    /// Index of the box at (row, col), or -1.
    int find(int row, int col) const {
        for (std::size_t i = 0; i < cells_.size(); ++i)
            if (cells_[i].row == row && cells_[i].col == col) return static_cast<int>(i);
        return -1;
    }

    bool is_corner(std::size_t i) const {
        return find(cells_[i].row, cells_[i].col + 1) < 0 && find(cells_[i].row + 1, cells_[i].col) < 0;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["modulus"] = modulus_;
        j["cells"] = nlohmann::json::array();
        for (const auto& c : cells_)
            j["cells"].push_back({{"row", c.row}, {"col", c.col}, {"exponent", c.exponent}, {"residue", c.residue}});
        return j;
    }

    static SchurDiagram from_json(const nlohmann::json& j) {
        try {
            std::vector<SchurCell> cells;
            for (const auto& c : j.at("cells"))
                cells.push_back({c.at("row").get<int>(), c.at("col").get<int>(), c.at("exponent").get<int>(),
                                 c.value("residue", 0)});
            return SchurDiagram(j.value("modulus", 1), std::move(cells));
        } catch (const nlohmann::json::exception& e) {
            throw ShapeError(std::string("schur json: ") + e.what());
        }
    }

private:
    // Cells are kept in reading order: top row first, left to right.
    void validate() {
        if (modulus_ < 1) throw ShapeError("schur: modulus must be positive");
        if (cells_.empty()) throw ShapeError("schur: empty diagram");
        for (auto& c : cells_) {
            if (c.row < 1 || c.col < 1) throw ShapeError("schur: rows and columns start at 1");
            if (c.exponent < 1) throw ShapeError("schur: exponents must be positive");
            if (c.residue < 0 || c.residue >= modulus_) throw ShapeError("schur: residue out of range");
        }
        std::sort(cells_.begin(), cells_.end(),
                  [](const SchurCell& a, const SchurCell& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
        std::map<int, std::pair<int, int>> span;  // row -> [first, last] column
        for (std::size_t i = 0; i < cells_.size(); ++i) {
            if (i && cells_[i].row == cells_[i - 1].row && cells_[i].col == cells_[i - 1].col)
                throw ShapeError("schur: duplicate box");
            auto [it, fresh] = span.emplace(cells_[i].row, std::make_pair(cells_[i].col, cells_[i].col));
            if (!fresh) {
                if (cells_[i].col != it->second.second + 1) throw ShapeError("schur: row is not contiguous");
                it->second.second = cells_[i].col;
            }
        }
        // Skew shape lambda / mu: consecutive rows, starts and ends weakly decreasing downward.
        int prev_row = 0;
        std::pair<int, int> prev{0, 0};
        for (const auto& [row, s] : span) {
            if (prev_row && row != prev_row + 1) throw ShapeError("schur: rows must be consecutive");
            if (prev_row && (s.first > prev.first || s.second > prev.second)) throw ShapeError("schur: not a skew shape");
            prev_row = row;
            prev = s;
        }
    }

    int modulus_ = 1;
    std::vector<SchurCell> cells_;
};

/// Exact sum of N^{#boxes} / M^s over semistandard fillings with entries <= bound.
inline Rational schur_truncated(const SchurDiagram& d, long bound) {
    if (bound < 1) throw DomainError("schur: entry bound must be at least 1");
    const std::size_t n = d.size();
    const int N = d.modulus();
    std::vector<int> left(n, -1), up(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        left[i] = d.find(d.cells()[i].row, d.cells()[i].col - 1);
        up[i] = d.find(d.cells()[i].row - 1, d.cells()[i].col);
    }
    // The last box in reading order closes through suffix sums of its weights.
    const SchurCell& last = d.cells().back();
    std::vector<Rational> tail(static_cast<std::size_t>(bound) + 2, Rational(0));
    for (long m = bound; m >= 1; --m) {
        tail[m] = tail[m + 1];
        if (m % N == last.residue % N) tail[m] += inverse_power(m, last.exponent);
    }
    std::vector<long> value(n, 0);
    std::vector<Rational> partial(n + 1, Rational(1));
    Rational total = 0;
    auto lower = [&](std::size_t i) {
        long lo = 1;
        if (left[i] >= 0) lo = std::max(lo, value[left[i]]);
        if (up[i] >= 0) lo = std::max(lo, value[up[i]] + 1);
        return lo;
    };
    auto dfs = [&](auto&& self, std::size_t i) -> void {
        const long lo = lower(i);
        if (i + 1 == n) {
            if (lo <= bound) total += partial[i] * tail[lo];
            return;
        }
        const SchurCell& c = d.cells()[i];
        for (long m = lo; m <= bound; ++m) {
            if (m % N != c.residue % N) continue;
            value[i] = m;
            partial[i + 1] = partial[i] * inverse_power(m, c.exponent);
            self(self, i + 1);
        }
    };
    dfs(dfs, 0);
    Integer weight = 1;
    for (std::size_t i = 0; i < n; ++i) weight *= N;
    return total * Rational(weight);
}

/// Whether every allowable path P has Re(sum over its last l boxes) > l for all l.
///
/// A move from B to C is allowable when B lies in an earlier column or an
/// earlier row than C and the boxes directly above and to the left of C are
/// already covered. `exponents` follows the reading order of the diagram.
inline bool allowable_path_check(const SchurDiagram& d, const std::vector<double>& exponents) {
    const std::size_t n = d.size();
    if (exponents.size() != n) throw ShapeError("schur: one exponent per box required");
    if (n > 16) throw ShapeError("schur: too many boxes for path enumeration");
    std::vector<int> above(n), before(n);
    for (std::size_t i = 0; i < n; ++i) {
        above[i] = d.find(d.cells()[i].row - 1, d.cells()[i].col);
        before[i] = d.find(d.cells()[i].row, d.cells()[i].col - 1);
    }
    std::vector<int> path;
    std::vector<bool> used(n, false);
    bool ok = true;
    auto check = [&] {
        double s = 0;
        for (std::size_t l = 1; l <= n; ++l) {
            s += exponents[static_cast<std::size_t>(path[n - l])];
            if (!(s > static_cast<double>(l))) return false;
        }
        return true;
    };
    auto dfs = [&](auto&& self) -> void {
        if (!ok) return;
        if (path.size() == n) {
            ok = check();
            return;
        }
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c]) continue;
            if (above[c] >= 0 && !used[above[c]]) continue;
            if (before[c] >= 0 && !used[before[c]]) continue;
            if (!path.empty()) {
                const SchurCell& b = d.cells()[static_cast<std::size_t>(path.back())];
                const SchurCell& cc = d.cells()[c];
                if (!(b.col < cc.col || b.row < cc.row)) continue;
            }
            used[c] = true;
            path.push_back(static_cast<int>(c));
            self(self);
            path.pop_back();
            used[c] = false;
        }
    };
    dfs(dfs);
    return ok;
}

inline bool allowable_path_check(const SchurDiagram& d) {
    std::vector<double> e;
    for (const auto& c : d.cells()) e.push_back(c.exponent);
    return allowable_path_check(d, e);
}

namespace detail {

inline int residue_of(Parity p) { return p == Parity::Odd ? 1 : 0; }

/// Anti-hook: k_1..k_{r-1} down column s, l_1..l_{s-1} along row r, corner k_r + l_s.
inline SchurDiagram anti_hook(const Composition& k, const Composition& l, int modulus,
                              const std::vector<int>& col_res, const std::vector<int>& row_res, int corner_res) {
    if (k.empty() || l.empty()) throw ShapeError("anti_hook: both indices must be nonempty");
    const int r = static_cast<int>(k.depth()), s = static_cast<int>(l.depth());
    std::vector<SchurCell> cells;
    for (int i = 0; i + 1 < r; ++i) cells.push_back({i + 1, s, k.part(i), col_res.empty() ? 0 : col_res[i]});
    for (int j = 0; j + 1 < s; ++j) cells.push_back({r, j + 1, l.part(j), row_res.empty() ? 0 : row_res[j]});
    cells.push_back({r, s, k.last() + l.last(), corner_res});
    return SchurDiagram(modulus, std::move(cells));
}

inline std::vector<int> chain_residues(std::size_t len, Parity first) {
    std::vector<int> out;
    for (Parity p : interleaved_parities(len, first)) out.push_back(residue_of(p));
    return out;
}

}  // namespace detail

/// N = 1 anti-hook whose Schur value is zeta(k * l*).
inline SchurDiagram anti_hook_ky(const Composition& k, const Composition& l) {
    return detail::anti_hook(k, l, 1, {}, {}, 0);
}

/// Mod-2 anti-hook of a convoluted T value (s_family = false) or S value.
inline SchurDiagram anti_hook_mod2(const Composition& k, const Composition& l, ConvCase c, bool s_family) {
    if (conv_case_of(k, l) != c) throw ShapeError("anti_hook_mod2: depths do not match the case");
    Parity kfirst = Parity::Odd, lfirst = Parity::Odd;
    bool even_corner = false;
    if (s_family) {
        if (c != ConvCase::EvenEven && c != ConvCase::OddOdd) throw ShapeError("anti_hook_mod2: no such S case");
        kfirst = lfirst = Parity::Even;
        even_corner = c == ConvCase::OddOdd;
    } else {
        lfirst = (c == ConvCase::EvenOdd || c == ConvCase::OddEven) ? Parity::Even : Parity::Odd;
        even_corner = c == ConvCase::EvenEven || c == ConvCase::EvenOdd;
    }
    return detail::anti_hook(k, l, 2, detail::chain_residues(k.depth() - 1, kfirst),
                             detail::chain_residues(l.depth() - 1, lfirst), even_corner ? 0 : 1);
}

/// Largest corner entry for the convoluted partial sum over n <= N.
inline long anti_hook_mod2_bound(ConvCase c, bool s_family, long N) {
    const bool even = s_family ? c == ConvCase::OddOdd : (c == ConvCase::EvenEven || c == ConvCase::EvenOdd);
    return even ? 2 * N : 2 * N - 1;
}

}  // namespace mzv

#endif  // MZV_SCHUR_HPP
