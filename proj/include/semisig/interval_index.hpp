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
 * @file interval_index.hpp
 *
 * Dyadic interval index for strict signature queries.
 *
 * The horizon is padded to 2^N with zero entries (which leaves every
 * signature coefficient unchanged). For each dyadic block (j*2^n,
 * (j+1)*2^n] the index stores the signature restricted to all contiguous
 * factors of the tracked word; level n+1 follows from level n by Chen's
 * identity. A query on (s, t] covers the window with the coarsest dyadic
 * blocks (at most 2N of them) and combines per-block coefficients over all
 * deconcatenations of the queried factor.
 *
 * Tracking all k(k+1)/2 contiguous factors (not only prefixes/suffixes) is
 * what makes the level-wise Chen recombination self-contained: every part
 * of a deconcatenation of a factor is again a factor.
 */

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "semisig/semiring.hpp"
#include "semisig/signature.hpp"
#include "semisig/words.hpp"

namespace semisig {

/// The block (index * 2^level, (index + 1) * 2^level].
struct dyadic_block {
    std::size_t level = 0;
    std::size_t index = 0;
    friend bool operator==(const dyadic_block&, const dyadic_block&) = default;
};

/**
 * Coarsest ordered dyadic cover of (s, t] inside (0, 2^levels]. At most
 * 2 * levels blocks; replacing two siblings by their parent would always
 * break containment.
 */
inline std::vector<dyadic_block> dyadic_cover(std::size_t s, std::size_t t, std::size_t levels) {
    const std::size_t horizon = std::size_t{1} << levels;
    if (s >= t || t > horizon)
        throw std::out_of_range("dyadic_cover: need 0 <= s < t <= " + std::to_string(horizon));
    std::vector<dyadic_block> out;
    auto rec = [&](auto&& self, std::size_t level, std::size_t index) -> void {
        const std::size_t lo = index << level;
        const std::size_t hi = (index + 1) << level;
        if (hi <= s || lo >= t) return;
        if (s <= lo && hi <= t) {
            out.push_back({level, index});
            return;
        }
        self(self, level - 1, 2 * index);
        self(self, level - 1, 2 * index + 1);
    };
    rec(rec, levels, 0);
    return out;
}

/// Precomputed signature blocks for one word over one series.
template <semiring S>
class dyadic_index {
 public:
    using value = value_t<S>;

    /// O(T log T * k^3) build; factors are evaluated on every block of
    /// every level.
    static dyadic_index build(const time_series<S>& z, const word& w) {
        if (z.length() == 0) throw std::invalid_argument("dyadic_index: series must be non-empty");
        if (!w.standard())
            throw std::invalid_argument("dyadic_index: tracked word must be standard");
        dyadic_index idx(z.ops(), z.length(), levels_for(z.length()), w, factors(w));
        const std::size_t horizon = idx.horizon();
        const S& ops = idx.ops_;
        const std::size_t nf = idx.factors_.size();

        // level 0: single entries; padded positions contribute the zero
        // element, so every non-empty factor vanishes there.
        idx.blocks_.emplace_back(horizon * nf, ops.zero());
        for (std::size_t j = 0; j < horizon; ++j) {
            for (std::size_t fi = 0; fi < nf; ++fi) {
                const word& f = idx.factors_[fi];
                if (f.empty())
                    idx.blocks_[0][j * nf + fi] = ops.one();
                else if (f.length() == 1 && j + 1 <= z.length())
                    idx.blocks_[0][j * nf + fi] = letter_eval(z, j + 1, f[0]);
            }
        }
        for (std::size_t n = 1; n <= idx.levels_; ++n) {
            const std::size_t count = horizon >> n;
            idx.blocks_.emplace_back(count * nf, ops.zero());
            for (std::size_t j = 0; j < count; ++j)
                for (std::size_t fi = 0; fi < nf; ++fi)
                    idx.blocks_[n][j * nf + fi] =
                        idx.combine_children(n - 1, 2 * j, 2 * j + 1, idx.factors_[fi]);
        }
        idx.prefix_.emplace(iss_dp(z, w, 0, z.length()));
        return idx;
    }

    /// Reassembles a deserialized index; blocks are level-major, each block
    /// holding one value per factor.
    static dyadic_index from_parts(S ops, std::size_t length, std::size_t levels, word w,
                                   std::vector<word> factor_list,
                                   std::vector<std::vector<value>> blocks) {
        dyadic_index idx(std::move(ops), length, levels, std::move(w), std::move(factor_list));
        const std::size_t nf = idx.factors_.size();
        if (blocks.size() != levels + 1)
            throw std::invalid_argument("dyadic_index: wrong number of levels");
        for (std::size_t n = 0; n <= levels; ++n)
            if (blocks[n].size() != (idx.horizon() >> n) * nf)
                throw std::invalid_argument("dyadic_index: wrong block size at level " +
                                            std::to_string(n));
        idx.blocks_ = std::move(blocks);
        return idx;
    }

    std::size_t length() const { return length_; }
    std::size_t levels() const { return levels_; }
    std::size_t horizon() const { return std::size_t{1} << levels_; }
    const word& tracked_word() const { return w_; }
    const std::vector<word>& tracked_factors() const { return factors_; }
    const S& ops() const { return ops_; }

    /// Stored coefficient of a factor on the block (j*2^n, (j+1)*2^n].
    /// By value: vector<bool> cells have no addressable elements.
    value block_value(std::size_t level, std::size_t index, const word& v) const {
        if (level > levels_ || index >= (horizon() >> level))
            throw std::out_of_range("dyadic_index: no such block");
        return blocks_[level][index * factors_.size() + factor_position(v)];
    }

    /**
     * <ISS_{s,t}(z), v> for any contiguous factor v of the tracked word.
     * Queries anchored at 0 for prefixes of the tracked word short-circuit
     * to the DP table kept from the build.
     */
    value query(std::size_t s, std::size_t t, const word& v) const {
        if (s >= t || t > length_)
            throw std::out_of_range("dyadic_index: query window (" + std::to_string(s) + ", " +
                                    std::to_string(t) + "] not inside (0, " +
                                    std::to_string(length_) + "]");
        factor_position(v);  // validate early
        if (s == 0 && prefix_ && v.length() <= w_.length() && v == w_.prefix(v.length()))
            return prefix_->at(v.length(), t);
        const auto cover = dyadic_cover(s, t, levels_);
        value acc = ops_.zero();
        for (const auto& split : deconcatenations(v, cover.size())) {
            value p = ops_.one();
            for (std::size_t b = 0; b < cover.size(); ++b)
                p = ops_.mul(p, block_value(cover[b].level, cover[b].index, split[b]));
            acc = ops_.add(acc, p);
        }
        return acc;
    }

 private:
    dyadic_index(S ops, std::size_t length, std::size_t levels, word w, std::vector<word> fl)
        : ops_(std::move(ops)), length_(length), levels_(levels), w_(std::move(w)),
          factors_(std::move(fl)) {
        for (std::size_t i = 0; i < factors_.size(); ++i) factor_pos_[factors_[i]] = i;
    }

    static std::size_t levels_for(std::size_t length) {
        std::size_t n = 0;
        while ((std::size_t{1} << n) < length) ++n;
        return n;
    }

    std::size_t factor_position(const word& v) const {
        auto it = factor_pos_.find(v);
        if (it == factor_pos_.end())
            throw std::invalid_argument("dyadic_index: " + print_word(v) +
                                        " is not a factor of the tracked word");
        return it->second;
    }

    value combine_children(std::size_t level, std::size_t lj, std::size_t rj,
                           const word& f) const {
        const std::size_t nf = factors_.size();
        value acc = ops_.zero();
        for (const auto& split : deconcatenations(f, 2)) {
            const value& lv = blocks_[level][lj * nf + factor_pos_.at(split[0])];
            const value& rv = blocks_[level][rj * nf + factor_pos_.at(split[1])];
            acc = ops_.add(acc, ops_.mul(lv, rv));
        }
        return acc;
    }

    S ops_;
    std::size_t length_;
    std::size_t levels_;
    word w_;
    std::vector<word> factors_;
    std::map<word, std::size_t> factor_pos_;
    std::vector<std::vector<value>> blocks_;  // blocks_[n][j * nf + fi]
    std::optional<prefix_table<S>> prefix_;   // build-side only; not serialized
};

}  // namespace semisig
