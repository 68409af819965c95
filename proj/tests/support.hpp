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

// Sample pools and random generators shared by the unit and acceptance
// suites. Pools stay on small dyadic grids so double arithmetic is exact
// and equality checks are honest.

#include <random>
#include <vector>

#include "semisig/semiring.hpp"
#include "semisig/signature.hpp"
#include "semisig/words.hpp"

namespace semisig::testing {

template <semiring S>
std::vector<value_t<S>> sample_pool(const S& s) {
    std::vector<value_t<S>> pool;
    if constexpr (std::same_as<S, boolean>) {
        pool = {false, true, true};
    } else if constexpr (std::same_as<S, viterbi>) {
        for (int k = 0; k <= 16; k += 2) pool.push_back(k / 16.0);
    } else if constexpr (std::same_as<S, natural>) {
        for (int k = 0; k <= 5; ++k) pool.push_back(natural::value_type(k));
    } else if constexpr (std::same_as<S, real_field>) {
        for (int k = -6; k <= 6; ++k) pool.push_back(k / 2.0);
    } else if constexpr (std::same_as<S, expectation>) {
        for (int m = 0; m <= 3; ++m)
            for (int g = -2; g <= 2; g += 2) {
                std::vector<double> grad(s.dimension(), 0.0);
                grad[0] = g;
                if (s.dimension() > 1) grad[1] = static_cast<double>(m - g);
                pool.push_back({static_cast<double>(m), std::move(grad)});
            }
    } else {
        // xreal carriers: finite dyadics plus the additive zero
        for (int k = -8; k <= 8; ++k) pool.push_back(xreal::of(k / 2.0));
        pool.push_back(s.zero());
    }
    return pool;
}

template <semiring S>
time_series<S> random_series(const S& s, std::mt19937& rng, std::size_t length,
                             std::size_t dimension) {
    const auto pool = sample_pool(s);
    std::vector<value_t<S>> flat;
    flat.reserve(length * dimension);
    for (std::size_t i = 0; i < length * dimension; ++i) flat.push_back(pool[rng() % pool.size()]);
    return time_series<S>(s, dimension, std::move(flat));
}

/// All standard words over dimensions 1..d with the given bounds, empty
/// word included; mirrors the generator the job layer uses but kept local
/// so the suites do not depend on it.
inline std::vector<word> standard_words(int max_dim, int max_len, int max_weight) {
    std::vector<letter> letters;
    std::vector<letter::entry> cur;
    auto rec_letter = [&](auto&& self, int dim, int remaining) -> void {
        if (dim > max_dim) {
            if (!cur.empty()) letters.push_back(letter(cur));
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            if (e > 0) cur.push_back({dim, e});
            self(self, dim + 1, remaining - e);
            if (e > 0) cur.pop_back();
        }
    };
    rec_letter(rec_letter, 1, max_weight);
    std::vector<word> out;
    std::vector<letter> stack;
    auto rec_word = [&](auto&& self, int remaining) -> void {
        out.push_back(word(stack));
        if (static_cast<int>(stack.size()) == max_len) return;
        for (const letter& a : letters) {
            if (a.weight() > remaining) continue;
            stack.push_back(a);
            self(self, remaining - a.weight());
            stack.pop_back();
        }
    };
    rec_word(rec_word, max_weight);
    return out;
}

inline word random_standard_word(std::mt19937& rng, std::size_t len, int max_dim, int max_exp) {
    std::vector<letter> ls;
    for (std::size_t i = 0; i < len; ++i) {
        std::vector<letter::entry> entries;
        const int parts = 1 + static_cast<int>(rng() % 2);
        for (int p = 0; p < parts; ++p)
            entries.push_back({1 + static_cast<int>(rng() % max_dim),
                               1 + static_cast<int>(rng() % max_exp)});
        ls.push_back(letter(std::move(entries)));
    }
    return word(std::move(ls));
}

}  // namespace semisig::testing
