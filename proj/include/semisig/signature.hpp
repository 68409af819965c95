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
 * @file signature.hpp
 *
 * Iterated-sums signatures of d-dimensional series over a commutative
 * semiring.
 *
 * For a word w = w_1...w_k and the half-open window (s, t], the strict
 * signature coefficient is
 *
 *   <ISS_{s,t}(z), w> = SUM_{s < j_1 < ... < j_k <= t}
 *                       z_{j_1}^{(*w_1)} * ... * z_{j_k}^{(*w_k)}
 *
 * with SUM and * the semiring operations, z_j^{(*[i1^e1 i2^e2...])} the
 * product of coordinate powers, the empty word mapping to 1 and the empty
 * sum to 0.
 *
 * Two evaluation routes are provided on purpose: an enumerating oracle
 * (iss_bruteforce) and the linear-time dynamic programme (iss_dp); they
 * must agree exactly.
 */

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "semisig/semiring.hpp"
#include "semisig/words.hpp"
#include "semisig/quasishuffle.hpp"

namespace semisig {

/// Entries z_1..z_T, each a d-dimensional tuple of semiring values.
template <semiring S>
class time_series {
 public:
    using value = value_t<S>;

    time_series(S ops, std::size_t dimension, std::vector<value> flat)
        : ops_(std::move(ops)), dim_(dimension), flat_(std::move(flat)) {
        if (dim_ == 0) throw std::invalid_argument("time_series: dimension must be >= 1");
        if (flat_.size() % dim_ != 0)
            throw std::invalid_argument("time_series: values not a multiple of the dimension");
    }

    /// Converts rows of reals through the semiring's canonical embedding.
    static time_series from_reals(S ops, std::size_t dimension,
                                  const std::vector<std::vector<double>>& rows) {
        std::vector<value> flat;
        flat.reserve(rows.size() * dimension);
        for (const auto& row : rows) {
            if (row.size() != dimension)
                throw std::invalid_argument("time_series: row width mismatch");
            for (double x : row) flat.push_back(ops.from_real(x));
        }
        return time_series(std::move(ops), dimension, std::move(flat));
    }

    std::size_t length() const { return flat_.size() / dim_; }
    std::size_t dimension() const { return dim_; }
    const S& ops() const { return ops_; }

    /// Entry z_t, coordinate i; both 1-based.
    value at(std::size_t t, std::size_t i) const {
        return flat_[(t - 1) * dim_ + (i - 1)];
    }

 private:
    S ops_;
    std::size_t dim_;
    std::vector<value> flat_;
};

namespace detail {

template <semiring S>
value_t<S> mul_pow(const S& ops, const value_t<S>& base, unsigned e) {
    // exponentiation by squaring in the multiplicative monoid
    value_t<S> acc = ops.one();
    value_t<S> b = base;
    while (e != 0) {
        if (e & 1u) acc = ops.mul(acc, b);
        e >>= 1u;
        if (e != 0) b = ops.mul(b, b);
    }
    return acc;
}

template <semiring S>
value_t<S> letter_eval_impl(const time_series<S>& z, std::size_t t, const letter& a,
                            bool allow_laurent) {
    const S& ops = z.ops();
    value_t<S> acc = ops.one();
    for (const auto& [dim, exp] : a.entries()) {
        if (dim > static_cast<int>(z.dimension()))
            throw std::out_of_range("letter uses dimension " + std::to_string(dim) +
                                    " but the series has " + std::to_string(z.dimension()));
        value_t<S> c = z.at(t, static_cast<std::size_t>(dim));
        int e = exp;
        if (e < 0) {
            if (!allow_laurent)
                throw std::invalid_argument("negative exponents are only valid in Laurent mode");
            if constexpr (mul_invertible_semiring<S>) {
                auto inv = ops.mul_inverse(c);
                if (!inv)
                    throw std::domain_error("Laurent letter hit a value without a multiplicative inverse");
                c = *inv;
                e = -e;
            } else {
                throw std::domain_error("semiring '" + ops.id() +
                                        "' has no multiplicative inverses; Laurent letters need min-plus or max-plus");
            }
        }
        acc = ops.mul(acc, mul_pow(ops, c, static_cast<unsigned>(e)));
    }
    return acc;
}

/// eval[i][t-s-1] = z_t^{(*w_i)} for t in (s, t_end]; shared by the DP and
/// the oracle so letter powers are computed once per position.
template <semiring S>
std::vector<std::vector<value_t<S>>> letter_columns(const time_series<S>& z, const word& w,
                                                    std::size_t s, std::size_t t_end,
                                                    bool allow_laurent) {
    std::vector<std::vector<value_t<S>>> eval(w.length());
    for (std::size_t i = 0; i < w.length(); ++i) {
        eval[i].reserve(t_end - s);
        for (std::size_t t = s + 1; t <= t_end; ++t)
            eval[i].push_back(letter_eval_impl(z, t, w[i], allow_laurent));
    }
    return eval;
}

inline void check_window(std::size_t s, std::size_t t, std::size_t length) {
    if (s > t || t > length)
        throw std::out_of_range("window (" + std::to_string(s) + ", " + std::to_string(t) +
                                "] is not inside (0, " + std::to_string(length) + "]");
}

}  // namespace detail

/// z_t^{(*a)}: the product of coordinate powers named by the letter.
/// Standard letters only; Laurent evaluation lives with the non-strict
/// signature.
template <semiring S>
value_t<S> letter_eval(const time_series<S>& z, std::size_t t, const letter& a) {
    if (t < 1 || t > z.length()) throw std::out_of_range("letter_eval: index out of range");
    return detail::letter_eval_impl(z, t, a, /*allow_laurent=*/false);
}

/// Oracle route: enumerates all strictly increasing index tuples in (s, t].
template <semiring S>
value_t<S> iss_bruteforce(const time_series<S>& z, const word& w, std::size_t s, std::size_t t) {
    detail::check_window(s, t, z.length());
    if (!w.standard())
        throw std::invalid_argument("strict signature needs a standard word: " + print_word(w));
    const S& ops = z.ops();
    if (w.empty()) return ops.one();
    const auto eval = detail::letter_columns(z, w, s, t, false);
    value_t<S> acc = ops.zero();
    const std::size_t k = w.length();
    auto rec = [&](auto&& self, std::size_t i, std::size_t j_prev, const value_t<S>& partial) -> void {
        for (std::size_t j = j_prev + 1; j + (k - i - 1) <= t; ++j) {
            value_t<S> p = ops.mul(partial, eval[i][j - s - 1]);
            if (i + 1 == k)
                acc = ops.add(acc, p);
            else
                self(self, i + 1, j, p);
        }
    };
    rec(rec, 0, s, ops.one());
    return acc;
}

/**
 * Per-prefix, per-endpoint signature values from one DP sweep.
 * at(i, t) = <ISS_{s,t}(z), w_1...w_i> for 0 <= i <= k, s <= t <= end.
 */
template <semiring S>
class prefix_table {
 public:
    prefix_table(word w, std::size_t s, std::size_t t, std::size_t rows,
                 std::vector<value_t<S>> cells)
        : w_(std::move(w)), s_(s), t_(t), rows_(rows), cells_(std::move(cells)) {}

    const word& tracked_word() const { return w_; }
    std::size_t start() const { return s_; }
    std::size_t end() const { return t_; }

    // By value: vector<bool> cells have no addressable elements.
    value_t<S> at(std::size_t prefix_len, std::size_t t) const {
        if (prefix_len >= rows_ || t < s_ || t > t_)
            throw std::out_of_range("prefix_table: cell out of range");
        return cells_[prefix_len * (t_ - s_ + 1) + (t - s_)];
    }

    /// Full-word value at the right end of the window.
    value_t<S> final_value() const { return at(rows_ - 1, t_); }

 private:
    word w_;
    std::size_t s_, t_, rows_;
    std::vector<value_t<S>> cells_;
};

/**
 * Linear-time route, O((t-s) * |w|):
 *   row_i[t] = row_i[t-1] + row_{i-1}[t-1] * z_t^{(*w_i)}
 * Row 0 is identically 1 (empty word); row_i[s] = 0 for i >= 1.
 * Yields every prefix of w at every endpoint in one sweep.
 */
template <semiring S>
prefix_table<S> iss_dp(const time_series<S>& z, const word& w, std::size_t s, std::size_t t) {
    detail::check_window(s, t, z.length());
    if (!w.standard())
        throw std::invalid_argument("strict signature needs a standard word: " + print_word(w));
    const S& ops = z.ops();
    const std::size_t k = w.length();
    const std::size_t cols = t - s + 1;
    const auto eval = detail::letter_columns(z, w, s, t, false);
    std::vector<value_t<S>> cells((k + 1) * cols, ops.zero());
    for (std::size_t c = 0; c < cols; ++c) cells[c] = ops.one();
    for (std::size_t i = 1; i <= k; ++i) {
        const std::size_t row = i * cols;
        const std::size_t prev = (i - 1) * cols;
        cells[row] = ops.zero();
        for (std::size_t c = 1; c < cols; ++c)
            cells[row + c] = ops.add(cells[row + c - 1], ops.mul(cells[prev + c - 1], eval[i - 1][c - 1]));
    }
    return prefix_table<S>(w, s, t, k + 1, std::move(cells));
}

/// Full-word strict signature value on (s, t].
template <semiring S>
value_t<S> iss(const time_series<S>& z, const word& w, std::size_t s, std::size_t t) {
    return iss_dp(z, w, s, t).final_value();
}

enum class sig_mode { strict, nonstrict };

/**
 * A signature restricted to a finite word set: the window (s, t] plus a
 * coefficient map. The empty word is always tracked with coefficient 1.
 * Strict and non-strict signatures are distinct types; they cannot be
 * mixed in chen_combine.
 */
template <semiring S, sig_mode M = sig_mode::strict>
class basic_signature {
 public:
    using value = value_t<S>;

    basic_signature(S ops, std::size_t s, std::size_t t, std::map<word, value> coeffs)
        : ops_(std::move(ops)), s_(s), t_(t), coeffs_(std::move(coeffs)) {
        if (s_ > t_) throw std::invalid_argument("signature: start must not exceed end");
        coeffs_[word{}] = ops_.one();
    }

    static constexpr sig_mode mode() { return M; }
    std::size_t start() const { return s_; }
    std::size_t end() const { return t_; }
    const S& ops() const { return ops_; }

    bool contains(const word& w) const { return coeffs_.count(w) != 0; }

    const value& at(const word& w) const {
        auto it = coeffs_.find(w);
        if (it == coeffs_.end())
            throw std::out_of_range("signature does not track the word " + print_word(w));
        return it->second;
    }

    const std::map<word, value>& coefficients() const { return coeffs_; }

    friend bool operator==(const basic_signature& a, const basic_signature& b) {
        return a.s_ == b.s_ && a.t_ == b.t_ && a.coeffs_ == b.coeffs_;
    }

 private:
    S ops_;
    std::size_t s_, t_;
    std::map<word, value> coeffs_;
};

template <semiring S>
using signature = basic_signature<S, sig_mode::strict>;

/// Strict signature of z on (s, t] tracking the prefix closure of `words`.
template <semiring S>
signature<S> compute_signature(const time_series<S>& z, std::span<const word> words,
                               std::size_t s, std::size_t t) {
    std::map<word, value_t<S>> coeffs;
    for (const word& w : words) {
        const auto table = iss_dp(z, w, s, t);
        for (std::size_t i = 0; i <= w.length(); ++i) coeffs[w.prefix(i)] = table.at(i, t);
    }
    return signature<S>(z.ops(), s, t, std::move(coeffs));
}

/**
 * Chen's identity over adjacent windows (p, r] and (r, q]:
 *
 *   <ISS_{p,q}, w> = SUM_{uv = w} <ISS_{p,r}, u> * <ISS_{r,q}, v>
 *
 * The same deconcatenation formula is exact in both modes: splitting a
 * weakly increasing tuple at "number of indices <= r" partitions the
 * non-strict index set just as the strict one, with no double counting,
 * so no idempotency is needed by the combine step itself.
 */
template <semiring S, sig_mode M>
value_t<S> chen_combine(const basic_signature<S, M>& left, const basic_signature<S, M>& right,
                        const word& w) {
    if (left.end() != right.start())
        throw std::invalid_argument("chen_combine: windows (" + std::to_string(left.start()) +
                                    ", " + std::to_string(left.end()) + "] and (" +
                                    std::to_string(right.start()) + ", " +
                                    std::to_string(right.end()) + "] are not adjacent");
    const S& ops = left.ops();
    value_t<S> acc = ops.zero();
    for (const auto& split : deconcatenations(w, 2))
        acc = ops.add(acc, ops.mul(left.at(split[0]), right.at(split[1])));
    return acc;
}

/// Pairing of a signature with a formal sum: SUM_w n_w <sig, w>, where the
/// multiplicity acts through nat_scale.
template <semiring S, sig_mode M>
value_t<S> eval_wordsum(const basic_signature<S, M>& sig, const word_sum& ws) {
    const S& ops = sig.ops();
    value_t<S> acc = ops.zero();
    for (const auto& [w, m] : ws) acc = ops.add(acc, nat_scale(ops, m, sig.at(w)));
    return acc;
}

/// Copy of z with the semiring zero inserted at position n (1 <= n <= T+1)
/// in every coordinate.
template <semiring S>
time_series<S> insert_zero_series(const time_series<S>& z, std::size_t n) {
    if (n < 1 || n > z.length() + 1)
        throw std::out_of_range("insert_zero_series: position out of range");
    const std::size_t d = z.dimension();
    std::vector<value_t<S>> flat;
    flat.reserve((z.length() + 1) * d);
    for (std::size_t t = 1; t <= z.length() + 1; ++t) {
        for (std::size_t i = 1; i <= d; ++i) {
            if (t < n)
                flat.push_back(z.at(t, i));
            else if (t == n)
                flat.push_back(z.ops().zero());
            else
                flat.push_back(z.at(t - 1, i));
        }
    }
    return time_series<S>(z.ops(), d, std::move(flat));
}

/// Words required by reconstruct_compressed up to a maximal effective
/// length: [d]^n and [d]^a [d^2] [d]^b over the chosen dimension.
inline std::vector<word> reconstruction_words(std::size_t max_len, int dim = 1) {
    std::vector<word> out;
    for (std::size_t n = 1; n <= max_len; ++n)
        out.push_back(word_from_composition(composition(n, 1), dim));
    for (std::size_t n = 1; n <= max_len; ++n) {
        for (std::size_t a = 0; a < n; ++a) {
            composition alpha(n, 1);
            alpha[a] = 2;
            out.push_back(word_from_composition(alpha, dim));
        }
    }
    return out;
}

/**
 * Recovers the compression of a one-dimensional series (its sequence of
 * non-zero entries) from a strict signature over a cancellative semiring.
 *
 * The effective length N is the largest n with <sig, [d]^n> != 0; each
 * entry follows from one cancellation:
 *   <sig, [d]^a [d^2] [d]^{N-a-1}> = compression_{a+1} * <sig, [d]^N>.
 *
 * Throws std::domain_error("not a signature") when a cancellation has no
 * solution, and std::out_of_range when a required word is not tracked.
 */
template <cancellative_semiring S>
std::vector<value_t<S>> reconstruct_compressed(const signature<S>& sig, int dim = 1) {
    const S& ops = sig.ops();
    auto ones_word = [&](std::size_t n) { return word_from_composition(composition(n, 1), dim); };
    std::size_t effective = 0;
    for (std::size_t n = 1; sig.contains(ones_word(n)); ++n)
        if (!(sig.at(ones_word(n)) == ops.zero())) effective = n;
    std::vector<value_t<S>> out;
    if (effective == 0) return out;
    const value_t<S> total = sig.at(ones_word(effective));
    out.reserve(effective);
    for (std::size_t a = 0; a < effective; ++a) {
        composition alpha(effective, 1);
        alpha[a] = 2;
        const value_t<S>& lifted = sig.at(word_from_composition(alpha, dim));
        auto entry = ops.cancel(lifted, total);
        if (!entry) throw std::domain_error("not a signature: cancellation failed at entry " +
                                            std::to_string(a + 1));
        out.push_back(*entry);
    }
    return out;
}

}  // namespace semisig
