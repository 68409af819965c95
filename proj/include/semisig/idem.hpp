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
 * @file idem.hpp
 *
 * Non-strict signature for idempotent semirings: index tuples are weakly
 * increasing,
 *
 *   <N_{s,t}(z), w> = SUM_{s < j_1 <= ... <= j_k <= t} z_{j_1}^{(*w_1)} ... z_{j_k}^{(*w_k)},
 *
 * which is a shuffle character and invariant under time warping (entry
 * duplication). Words may carry negative (Laurent) exponents when the
 * semiring's finite elements form a group under *, i.e. min-plus and
 * max-plus.
 */

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "semisig/semiring.hpp"
#include "semisig/signature.hpp"
#include "semisig/words.hpp"

namespace semisig {

template <semiring S>
using nonstrict_signature = basic_signature<S, sig_mode::nonstrict>;

/// Oracle route: enumerates all weakly increasing index tuples in (s, t].
template <semiring S>
value_t<S> iss_nonstrict_bruteforce(const time_series<S>& z, const word& w, std::size_t s,
                                    std::size_t t) {
    static_assert(S::is_idempotent, "the non-strict signature needs an idempotent addition");
    detail::check_window(s, t, z.length());
    const S& ops = z.ops();
    if (w.empty()) return ops.one();
    const auto eval = detail::letter_columns(z, w, s, t, /*allow_laurent=*/true);
    value_t<S> acc = ops.zero();
    const std::size_t k = w.length();
    auto rec = [&](auto&& self, std::size_t i, std::size_t j_prev, const value_t<S>& partial) -> void {
        for (std::size_t j = j_prev; j <= t; ++j) {
            value_t<S> p = ops.mul(partial, eval[i][j - s - 1]);
            if (i + 1 == k)
                acc = ops.add(acc, p);
            else
                self(self, i + 1, j, p);
        }
    };
    rec(rec, 0, s + 1, ops.one());
    return acc;
}

/**
 * Linear-time route, O((t-s) * |w|). The recurrence reads the previous row
 * at the same column, which is where the weak inequality j_{i-1} <= j_i
 * enters:
 *   row_i[t] = row_i[t-1] + row_{i-1}[t] * z_t^{(*w_i)}
 */
template <semiring S>
prefix_table<S> iss_nonstrict_dp(const time_series<S>& z, const word& w, std::size_t s,
                                 std::size_t t) {
    static_assert(S::is_idempotent, "the non-strict signature needs an idempotent addition");
    detail::check_window(s, t, z.length());
    const S& ops = z.ops();
    const std::size_t k = w.length();
    const std::size_t cols = t - s + 1;
    const auto eval = detail::letter_columns(z, w, s, t, /*allow_laurent=*/true);
    std::vector<value_t<S>> cells((k + 1) * cols, ops.zero());
    for (std::size_t c = 0; c < cols; ++c) cells[c] = ops.one();
    for (std::size_t i = 1; i <= k; ++i) {
        const std::size_t row = i * cols;
        const std::size_t prev = (i - 1) * cols;
        cells[row] = ops.zero();
        for (std::size_t c = 1; c < cols; ++c)
            cells[row + c] = ops.add(cells[row + c - 1], ops.mul(cells[prev + c], eval[i - 1][c - 1]));
    }
    return prefix_table<S>(w, s, t, k + 1, std::move(cells));
}

/// Full-word non-strict signature value on (s, t].
template <semiring S>
value_t<S> iss_nonstrict(const time_series<S>& z, const word& w, std::size_t s, std::size_t t) {
    return iss_nonstrict_dp(z, w, s, t).final_value();
}

/// Non-strict signature of z on (s, t] tracking the prefix closure of
/// `words`. Laurent words are accepted when the semiring supports them.
template <semiring S>
nonstrict_signature<S> compute_nonstrict_signature(const time_series<S>& z,
                                                   std::span<const word> words, std::size_t s,
                                                   std::size_t t) {
    std::map<word, value_t<S>> coeffs;
    for (const word& w : words) {
        const auto table = iss_nonstrict_dp(z, w, s, t);
        for (std::size_t i = 0; i <= w.length(); ++i) coeffs[w.prefix(i)] = table.at(i, t);
    }
    return nonstrict_signature<S>(z.ops(), s, t, std::move(coeffs));
}

/// Copy of z with entry n duplicated (1 <= n <= T). The non-strict
/// signature does not see the difference.
template <semiring S>
time_series<S> time_warp(const time_series<S>& z, std::size_t n) {
    if (n < 1 || n > z.length()) throw std::out_of_range("time_warp: position out of range");
    const std::size_t d = z.dimension();
    std::vector<value_t<S>> flat;
    flat.reserve((z.length() + 1) * d);
    for (std::size_t t = 1; t <= z.length(); ++t) {
        for (std::size_t i = 1; i <= d; ++i) flat.push_back(z.at(t, i));
        if (t == n)
            for (std::size_t i = 1; i <= d; ++i) flat.push_back(z.at(t, i));
    }
    return time_series<S>(z.ops(), d, std::move(flat));
}

}  // namespace semisig
