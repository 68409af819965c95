/*
 * Copyright 2026 The semisig Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

/**
 * @file qsym.hpp
 *
 * Truncated polynomial expressions in commuting variables X_1..X_{T_max}
 * with semiring coefficients, and the quasisymmetric layer on top:
 * monomial expressions M_alpha, the insert-zero variable substitution,
 * membership testing, products, the refinement order on compositions and
 * fundamental expressions F_alpha.
 *
 * insert_zero at position i sends X_j to X_j (j < i), to the semiring zero
 * (j = i) and to X_{j-1} (j > i); a truncated expression is quasisymmetric
 * exactly when it is invariant under all in-window insertions.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semisig/semiring.hpp"
#include "semisig/signature.hpp"
#include "semisig/words.hpp"

namespace semisig {

/// Product of variable powers X_{i1}^{e1}...X_{ik}^{ek}, indices ascending,
/// exponents >= 1. The empty monomial is the constant 1.
class monomial {
 public:
    using entry = std::pair<int, int>;  // (index >= 1, exponent >= 1)

    monomial() = default;

    explicit monomial(std::vector<entry> raw) {
        std::sort(raw.begin(), raw.end());
        for (const auto& [idx, exp] : raw) {
            if (idx < 1) throw std::invalid_argument("monomial: variable indices start at 1");
            if (exp < 1) throw std::invalid_argument("monomial: exponents must be >= 1");
            if (!entries_.empty() && entries_.back().first == idx)
                entries_.back().second += exp;
            else
                entries_.push_back({idx, exp});
        }
    }

    const std::vector<entry>& entries() const { return entries_; }
    bool constant() const { return entries_.empty(); }

    int degree() const {
        int d = 0;
        for (const auto& [idx, exp] : entries_) d += exp;
        return d;
    }

    int max_index() const { return entries_.empty() ? 0 : entries_.back().first; }

    /// Exponents read off in ascending index order.
    composition shape() const {
        composition alpha;
        alpha.reserve(entries_.size());
        for (const auto& [idx, exp] : entries_) alpha.push_back(exp);
        return alpha;
    }

    friend monomial operator*(const monomial& a, const monomial& b) {
        std::vector<entry> raw = a.entries_;
        raw.insert(raw.end(), b.entries_.begin(), b.entries_.end());
        return monomial(std::move(raw));
    }

    friend bool operator==(const monomial&, const monomial&) = default;
    friend auto operator<=>(const monomial&, const monomial&) = default;

 private:
    std::vector<entry> entries_;
};

inline std::string print_monomial(const monomial& m) {
    if (m.constant()) return "1";
    std::string s;
    for (const auto& [idx, exp] : m.entries()) {
        if (!s.empty()) s += ' ';
        s += "X" + std::to_string(idx);
        if (exp != 1) s += "^" + std::to_string(exp);
    }
    return s;
}

/// Parses "X2 X6^7 X8^5"; "" and "1" denote the constant monomial.
inline monomial parse_monomial(std::string_view text) {
    std::vector<monomial::entry> raw;
    std::size_t i = 0;
    while (i < text.size() && text[i] == ' ') ++i;
    if (text.substr(i) == "1" || i == text.size()) return monomial(std::move(raw));
    while (i < text.size()) {
        if (text[i] != 'X') throw std::invalid_argument("monomial: expected 'X' at byte " + std::to_string(i));
        ++i;
        auto read_int = [&]() {
            std::size_t from = i;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
            if (i == from) throw std::invalid_argument("monomial: expected digits at byte " + std::to_string(from));
            return std::stoi(std::string(text.substr(from, i - from)));
        };
        int idx = read_int();
        int exp = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            exp = read_int();
        }
        raw.push_back({idx, exp});
        while (i < text.size() && text[i] == ' ') ++i;
    }
    return monomial(std::move(raw));
}

/**
 * Truncated expression: finitely many monomials with coefficients, all
 * variable indices <= t_max and degrees <= d_max. Zero coefficients are
 * never stored.
 */
template <semiring S>
class poly_expr {
 public:
    using value = value_t<S>;

    poly_expr(S ops, std::size_t t_max, std::size_t d_max)
        : ops_(std::move(ops)), t_max_(t_max), d_max_(d_max) {}

    std::size_t t_max() const { return t_max_; }
    std::size_t d_max() const { return d_max_; }
    const S& ops() const { return ops_; }

    /// Adds v to the coefficient of m, enforcing the window invariants.
    void add_term(const monomial& m, const value& v) {
        if (m.max_index() > static_cast<int>(t_max_))
            throw std::out_of_range("poly_expr: variable index exceeds t_max");
        if (m.degree() > static_cast<int>(d_max_))
            throw std::out_of_range("poly_expr: monomial degree exceeds d_max");
        auto it = terms_.find(m);
        value nv = it == terms_.end() ? v : ops_.add(it->second, v);
        if (nv == ops_.zero()) {
            if (it != terms_.end()) terms_.erase(it);
            return;
        }
        if (it == terms_.end())
            terms_.emplace(m, std::move(nv));
        else
            it->second = std::move(nv);
    }

    /// Coefficient of m; the zero element when absent.
    value at(const monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? ops_.zero() : it->second;
    }

    const std::map<monomial, value>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

 private:
    S ops_;
    std::size_t t_max_;
    std::size_t d_max_;
    std::map<monomial, value> terms_;
};

namespace detail {

inline std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace detail

/**
 * Monomial expression M_alpha truncated to the window [1, t_max]: the sum
 * of X_{t1}^{a1}...X_{tk}^{ak} over all ascending supports t1 < ... < tk,
 * each with coefficient 1. Empty when len(alpha) > t_max.
 */
template <semiring S>
poly_expr<S> monomial_expr(const S& ops, const composition& alpha, std::size_t t_max) {
    for (int part : alpha)
        if (part < 1) throw std::invalid_argument("monomial_expr: composition parts must be >= 1");
    std::size_t d_max = 0;
    for (int part : alpha) d_max += static_cast<std::size_t>(part);
    poly_expr<S> p(ops, t_max, d_max);
    const std::size_t k = alpha.size();
    std::vector<monomial::entry> support(k);
    auto rec = [&](auto&& self, std::size_t slot, int from) -> void {
        if (slot == k) {
            p.add_term(monomial(support), ops.one());
            return;
        }
        for (int idx = from; idx + static_cast<int>(k - slot - 1) <= static_cast<int>(t_max); ++idx) {
            support[slot] = {idx, alpha[slot]};
            self(self, slot + 1, idx + 1);
        }
    };
    rec(rec, 0, 1);
    return p;
}

/**
 * Variable substitution X_j -> X_j (j < i), 0 (j = i), X_{j-1} (j > i).
 * Shrinks the window by one when i lies inside it.
 */
template <semiring S>
poly_expr<S> insert_zero(const poly_expr<S>& p, int i) {
    if (i < 1) throw std::invalid_argument("insert_zero: position must be >= 1");
    const bool in_window = i <= static_cast<int>(p.t_max());
    poly_expr<S> out(p.ops(), in_window ? p.t_max() - 1 : p.t_max(), p.d_max());
    for (const auto& [m, c] : p.terms()) {
        bool killed = false;
        std::vector<monomial::entry> entries;
        entries.reserve(m.entries().size());
        for (const auto& [idx, exp] : m.entries()) {
            if (idx == i) {
                killed = true;
                break;
            }
            entries.push_back({idx > i ? idx - 1 : idx, exp});
        }
        if (!killed) out.add_term(monomial(std::move(entries)), c);
    }
    return out;
}

namespace detail {

template <semiring S>
poly_expr<S> restrict_window(const poly_expr<S>& p, std::size_t t_max) {
    poly_expr<S> out(p.ops(), t_max, p.d_max());
    for (const auto& [m, c] : p.terms())
        if (m.max_index() <= static_cast<int>(t_max)) out.add_term(m, c);
    return out;
}

/// Shape classes must be uniform and fully supported inside the window.
template <semiring S>
bool quasisymmetric_by_shapes(const poly_expr<S>& p) {
    std::map<composition, std::pair<value_t<S>, std::uint64_t>> classes;
    for (const auto& [m, c] : p.terms()) {
        auto [it, fresh] = classes.try_emplace(m.shape(), c, 0);
        if (!fresh && !(it->second.first == c)) return false;
        ++it->second.second;
    }
    for (const auto& [shape, info] : classes)
        if (info.second != binomial(p.t_max(), shape.size())) return false;
    return true;
}

template <semiring S>
bool quasisymmetric_by_insertions(const poly_expr<S>& p) {
    if (p.t_max() == 0) return true;
    const auto restricted = restrict_window(p, p.t_max() - 1);
    for (int i = 1; i <= static_cast<int>(p.t_max()); ++i)
        if (!(insert_zero(p, i).terms() == restricted.terms())) return false;
    return true;
}

}  // namespace detail

/**
 * Quasisymmetry within the truncation window. The shape-class definition
 * is ground truth; invariance under every in-window insert_zero is checked
 * alongside and any disagreement is an internal consistency failure.
 */
template <semiring S>
bool is_quasisymmetric(const poly_expr<S>& p) {
    const bool direct = detail::quasisymmetric_by_shapes(p);
    const bool via_insertions = detail::quasisymmetric_by_insertions(p);
    if (direct != via_insertions)
        throw std::logic_error("is_quasisymmetric: shape and insert-zero routes disagree");
    return direct;
}

/// Cauchy product. Windows must match; degree bounds add.
template <semiring S>
poly_expr<S> expr_mul(const poly_expr<S>& p, const poly_expr<S>& q) {
    if (p.t_max() != q.t_max())
        throw std::invalid_argument("expr_mul: truncation windows differ");
    poly_expr<S> out(p.ops(), p.t_max(), p.d_max() + q.d_max());
    const S& ops = p.ops();
    for (const auto& [mp, cp] : p.terms())
        for (const auto& [mq, cq] : q.terms()) out.add_term(mp * mq, ops.mul(cp, cq));
    return out;
}

/// beta <= alpha in the refinement order, with the block sizes that fuse
/// alpha into beta.
struct refinement_witness {
    composition beta;
    composition alpha;
    std::vector<int> blocks;  // blocks[i] consecutive parts of alpha sum to beta[i]
};

/**
 * beta <= alpha iff beta arises by summing consecutive parts of alpha.
 * The greedy scan is forced, so the witness is unique when it exists.
 */
inline std::optional<refinement_witness> refinement_leq(const composition& beta,
                                                        const composition& alpha) {
    refinement_witness w{beta, alpha, {}};
    std::size_t j = 0;
    for (int target : beta) {
        int acc = 0;
        int count = 0;
        while (acc < target && j < alpha.size()) {
            acc += alpha[j];
            ++j;
            ++count;
        }
        if (acc != target) return std::nullopt;
        w.blocks.push_back(count);
    }
    if (j != alpha.size()) return std::nullopt;
    return w;
}

/// All refinements of alpha (compositions beta with alpha <= beta), i.e.
/// the monomial support of the fundamental expression F_alpha. Exactly
/// prod 2^{alpha_i - 1} results, sorted.
inline std::vector<composition> fundamental_expand(const composition& alpha) {
    std::vector<composition> out{{}};
    for (int part : alpha) {
        if (part < 1) throw std::invalid_argument("fundamental_expand: parts must be >= 1");
        // compositions of one part
        std::vector<composition> splits;
        composition cur;
        auto rec = [&](auto&& self, int rest) -> void {
            if (rest == 0) {
                splits.push_back(cur);
                return;
            }
            for (int first = 1; first <= rest; ++first) {
                cur.push_back(first);
                self(self, rest - first);
                cur.pop_back();
            }
        };
        rec(rec, part);
        std::vector<composition> next;
        next.reserve(out.size() * splits.size());
        for (const auto& head : out)
            for (const auto& tail : splits) {
                composition c = head;
                c.insert(c.end(), tail.begin(), tail.end());
                next.push_back(std::move(c));
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Evaluates M_alpha on a one-dimensional series: substitute X_t = z_t.
/// Agrees with the strict signature of the word [1^a1]...[1^ak].
template <semiring S>
value_t<S> m_eval(const composition& alpha, const time_series<S>& z) {
    if (z.dimension() != 1)
        throw std::invalid_argument("m_eval: series must be one-dimensional");
    const S& ops = z.ops();
    const auto expr = monomial_expr(ops, alpha, z.length());
    value_t<S> acc = ops.zero();
    for (const auto& [m, c] : expr.terms()) {
        value_t<S> p = c;
        for (const auto& [idx, exp] : m.entries())
            p = ops.mul(p, detail::mul_pow(ops, z.at(static_cast<std::size_t>(idx), 1),
                                           static_cast<unsigned>(exp)));
        acc = ops.add(acc, p);
    }
    return acc;
}

/**
 * Greedy monomial-basis decomposition of a quasisymmetric expression:
 * repeatedly take the least remaining monomial, read off its shape class
 * and coefficient, check the class is uniform and fully supported, remove
 * it. Throws std::invalid_argument when p is not quasisymmetric in its
 * window. The constant term is reported under the empty composition.
 */
template <semiring S>
std::map<composition, value_t<S>> decompose_monomial_basis(const poly_expr<S>& p) {
    std::map<monomial, value_t<S>> rest(p.terms().begin(), p.terms().end());
    std::map<composition, value_t<S>> out;
    while (!rest.empty()) {
        const auto [m0, c0] = *rest.begin();
        const composition shape = m0.shape();
        std::uint64_t count = 0;
        for (auto it = rest.begin(); it != rest.end();) {
            if (it->first.shape() == shape) {
                if (!(it->second == c0))
                    throw std::invalid_argument("decompose: shape class has unequal coefficients");
                it = rest.erase(it);
                ++count;
            } else {
                ++it;
            }
        }
        if (count != detail::binomial(p.t_max(), shape.size()))
            throw std::invalid_argument("decompose: shape class not fully supported in the window");
        out.emplace(shape, c0);
    }
    return out;
}

}  // namespace semisig
