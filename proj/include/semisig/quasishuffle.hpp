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
 * @file quasishuffle.hpp
 *
 * Quasi-shuffle and shuffle products on words, with natural-number
 * multiplicities, plus the equivalent closed form via surjections.
 *
 * Recursion on last letters:
 *   u.a ** v.b = (u ** v.b).a + (u.a ** v).b + (u ** v).[ab]
 * where [ab] is the bracket merge; the plain shuffle drops the merge term.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "semisig/words.hpp"

namespace semisig {

/// Formal sum of words with multiplicities in N.
class word_sum {
 public:
    using term_map = std::map<word, std::uint64_t>;

    word_sum() = default;
    explicit word_sum(const word& w) { terms_[w] = 1; }

    void add(const word& w, std::uint64_t mult) {
        if (mult == 0) return;
        terms_[w] += mult;
    }

    std::uint64_t multiplicity(const word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? 0 : it->second;
    }

    std::size_t size() const { return terms_.size(); }

    std::uint64_t total_multiplicity() const {
        std::uint64_t t = 0;
        for (const auto& [w, m] : terms_) t += m;
        return t;
    }

    term_map::const_iterator begin() const { return terms_.begin(); }
    term_map::const_iterator end() const { return terms_.end(); }

    friend bool operator==(const word_sum&, const word_sum&) = default;

 private:
    term_map terms_;
};

namespace detail {

inline word append(const word& w, const letter& a) {
    word r = w;
    r.push_back(a);
    return r;
}

template <bool Merge>
word_sum shuffle_impl(const word& u, const word& v) {
    // memo[i][j] = product of the length-i prefix of u with the length-j
    // prefix of v; the recursion only ever strips last letters.
    std::vector<std::vector<std::optional<word_sum>>> memo(
        u.length() + 1, std::vector<std::optional<word_sum>>(v.length() + 1));
    auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> const word_sum& {
        auto& slot = memo[i][j];
        if (slot) return *slot;
        word_sum r;
        if (i == 0) {
            r.add(v.prefix(j), 1);
        } else if (j == 0) {
            r.add(u.prefix(i), 1);
        } else {
            for (const auto& [w, m] : self(self, i - 1, j)) r.add(append(w, u[i - 1]), m);
            for (const auto& [w, m] : self(self, i, j - 1)) r.add(append(w, v[j - 1]), m);
            if constexpr (Merge) {
                const letter merged = bracket_merge(u[i - 1], v[j - 1]);
                for (const auto& [w, m] : self(self, i - 1, j - 1)) r.add(append(w, merged), m);
            }
        }
        slot = std::move(r);
        return *slot;
    };
    return rec(rec, u.length(), v.length());
}

}  // namespace detail

/// Quasi-shuffle product. Throws degenerate_bracket if a merge of Laurent
/// letters cancels completely.
inline word_sum quasi_shuffle(const word& u, const word& v) {
    return detail::shuffle_impl<true>(u, v);
}

/// Shuffle product (no merge terms); never throws.
inline word_sum shuffle(const word& u, const word& v) {
    return detail::shuffle_impl<false>(u, v);
}

/// Bilinear extension of the quasi-shuffle to formal sums.
inline word_sum quasi_shuffle(const word_sum& p, const word_sum& q) {
    word_sum r;
    for (const auto& [u, mu] : p)
        for (const auto& [v, mv] : q)
            for (const auto& [w, m] : quasi_shuffle(u, v)) r.add(w, mu * mv * m);
    return r;
}

/**
 * A (k1,k2)-quasi-shuffle of type k: a surjection f from {1..k1+k2} onto
 * {1..k} that is strictly increasing on {1..k1} and on {k1+1..k1+k2}.
 * Fibers then automatically have size 1 or 2, one element per block.
 */
struct qshuffle_surjection {
    std::size_t k1 = 0;
    std::size_t k2 = 0;
    std::size_t k = 0;
    std::vector<std::size_t> assignment;  // assignment[m] = f(m+1), values in 1..k
};

/// All (k1,k2)-quasi-shuffles, for k from max(k1,k2) to k1+k2. Equivalent
/// to choosing the image sets of the two blocks so that they cover {1..k}.
inline std::vector<qshuffle_surjection> enumerate_qshuffles(std::size_t k1, std::size_t k2) {
    std::vector<qshuffle_surjection> out;
    auto subsets = [](std::size_t k, std::size_t take) {
        std::vector<std::vector<std::size_t>> subs;
        std::vector<std::size_t> cur;
        auto rec = [&](auto&& self, std::size_t next) -> void {
            if (cur.size() == take) {
                subs.push_back(cur);
                return;
            }
            for (std::size_t v = next; v + (take - cur.size()) <= k + 1; ++v) {
                cur.push_back(v);
                self(self, v + 1);
                cur.pop_back();
            }
        };
        rec(rec, 1);
        return subs;
    };
    const std::size_t lo = std::max(k1, k2);
    for (std::size_t k = lo; k <= k1 + k2; ++k) {
        for (const auto& s1 : subsets(k, k1)) {
            for (const auto& s2 : subsets(k, k2)) {
                std::vector<bool> covered(k + 1, false);
                for (std::size_t v : s1) covered[v] = true;
                for (std::size_t v : s2) covered[v] = true;
                bool onto = true;
                for (std::size_t v = 1; v <= k; ++v) onto = onto && covered[v];
                if (!onto) continue;
                qshuffle_surjection f{k1, k2, k, {}};
                f.assignment.reserve(k1 + k2);
                f.assignment.insert(f.assignment.end(), s1.begin(), s1.end());
                f.assignment.insert(f.assignment.end(), s2.begin(), s2.end());
                out.push_back(std::move(f));
            }
        }
    }
    return out;
}

/**
 * Quasi-shuffle evaluated through the surjection family: position l of the
 * output word merges the letters of the fiber over l. Agrees exactly with
 * the recursive product, multiplicities included.
 */
inline word_sum quasi_shuffle_via_surjections(const word& u, const word& v) {
    const std::size_t k1 = u.length();
    const std::size_t k2 = v.length();
    word_sum out;
    for (const qshuffle_surjection& f : enumerate_qshuffles(k1, k2)) {
        std::vector<std::vector<letter::entry>> slots(f.k);
        for (std::size_t m = 0; m < k1 + k2; ++m) {
            const letter& a = m < k1 ? u[m] : v[m - k1];
            auto& slot = slots[f.assignment[m] - 1];
            slot.insert(slot.end(), a.entries().begin(), a.entries().end());
        }
        std::vector<letter> ls;
        ls.reserve(f.k);
        for (auto& raw : slots) ls.push_back(letter(std::move(raw)));
        out.add(word(std::move(ls)), 1);
    }
    return out;
}

}  // namespace semisig
