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
 * @file words.hpp
 *
 * Words over an extended alphabet of bracketed letters.
 *
 * A letter is a non-empty map {dimension -> exponent} with non-zero
 * exponents; canonical form keeps dimensions ascending. Standard letters
 * have exponents >= 1; Laurent letters may carry negative exponents.
 * A word is a finite sequence of letters; the empty word is valid.
 *
 * Text form, e.g. "[1][2^3]" or "[1 2^-1]":
 *   word   := ( "[" factor ( ws factor )* "]" )*
 *   factor := digits ( "^" signed-digits )?
 * Multi-digit dimensions need the whitespace separation ("[10 2]");
 * canonical printing always separates factors inside a bracket with a
 * single space, omits "^1", and prints the empty word as "".
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace semisig {

/// Raised when merging brackets cancels every exponent.
struct degenerate_bracket : std::domain_error {
    degenerate_bracket() : std::domain_error("degenerate bracket: all exponents cancelled") {}
};

/// Word-grammar violation; offset is the byte position in the input.
struct word_parse_error : std::invalid_argument {
    word_parse_error(const std::string& msg, std::size_t at)
        : std::invalid_argument(msg + " (at byte " + std::to_string(at) + ")"), offset(at) {}
    std::size_t offset;
};

class letter {
 public:
    using entry = std::pair<int, int>;  // (dimension >= 1, exponent != 0)

    /// Canonicalizes: sorts by dimension, merges duplicates, drops zero
    /// sums. Throws degenerate_bracket if nothing survives.
    explicit letter(std::vector<entry> raw) {
        for (const auto& [dim, exp] : raw) {
            (void)exp;
            if (dim < 1) throw std::invalid_argument("letter: dimensions start at 1");
        }
        std::sort(raw.begin(), raw.end(),
                  [](const entry& a, const entry& b) { return a.first < b.first; });
        for (const auto& [dim, exp] : raw) {
            if (!entries_.empty() && entries_.back().first == dim)
                entries_.back().second += exp;
            else
                entries_.push_back({dim, exp});
        }
        std::erase_if(entries_, [](const entry& e) { return e.second == 0; });
        if (entries_.empty()) throw degenerate_bracket{};
    }

    letter(std::initializer_list<entry> raw) : letter(std::vector<entry>(raw)) {}

    static letter single(int dim, int exp = 1) { return letter({{dim, exp}}); }

    const std::vector<entry>& entries() const { return entries_; }

    int weight() const {
        int w = 0;
        for (const auto& [dim, exp] : entries_) w += std::abs(exp);
        return w;
    }

    /// True when every exponent is positive.
    bool standard() const {
        return std::all_of(entries_.begin(), entries_.end(),
                           [](const entry& e) { return e.second > 0; });
    }

    int max_dimension() const { return entries_.back().first; }

    friend bool operator==(const letter&, const letter&) = default;
    friend auto operator<=>(const letter&, const letter&) = default;

 private:
    std::vector<entry> entries_;
};

/// Pointwise exponent sum of two brackets; throws degenerate_bracket when
/// every exponent cancels.
inline letter bracket_merge(const letter& a, const letter& b) {
    std::vector<letter::entry> raw = a.entries();
    raw.insert(raw.end(), b.entries().begin(), b.entries().end());
    return letter(std::move(raw));
}

class word {
 public:
    word() = default;  // the empty word
    explicit word(std::vector<letter> ls) : letters_(std::move(ls)) {}

    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    int weight() const {
        int w = 0;
        for (const letter& a : letters_) w += a.weight();
        return w;
    }

    bool standard() const {
        return std::all_of(letters_.begin(), letters_.end(),
                           [](const letter& a) { return a.standard(); });
    }

    int max_dimension() const {
        int d = 0;
        for (const letter& a : letters_) d = std::max(d, a.max_dimension());
        return d;
    }

    const letter& operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<letter>& letters() const { return letters_; }

    void push_back(letter a) { letters_.push_back(std::move(a)); }

    /// First n letters.
    word prefix(std::size_t n) const {
        return word(std::vector<letter>(letters_.begin(), letters_.begin() + n));
    }
    /// Letters from position n to the end.
    word suffix_from(std::size_t n) const {
        return word(std::vector<letter>(letters_.begin() + n, letters_.end()));
    }
    /// n letters starting at position i (0-based).
    word factor(std::size_t i, std::size_t n) const {
        return word(std::vector<letter>(letters_.begin() + i, letters_.begin() + i + n));
    }

    friend word operator+(const word& a, const word& b) {
        std::vector<letter> ls = a.letters_;
        ls.insert(ls.end(), b.letters_.begin(), b.letters_.end());
        return word(std::move(ls));
    }

    friend bool operator==(const word&, const word&) = default;
    friend auto operator<=>(const word&, const word&) = default;

 private:
    std::vector<letter> letters_;
};

inline std::string print_letter(const letter& a) {
    std::string s = "[";
    bool first = true;
    for (const auto& [dim, exp] : a.entries()) {
        if (!first) s += ' ';
        first = false;
        s += std::to_string(dim);
        if (exp != 1) s += "^" + std::to_string(exp);
    }
    return s + "]";
}

inline std::string print_word(const word& w) {
    std::string s;
    for (const letter& a : w.letters()) s += print_letter(a);
    return s;
}

/// Parses the canonical word grammar; "" is the empty word.
inline word parse_word(std::string_view text) {
    std::vector<letter> letters;
    std::size_t i = 0;
    auto read_int = [&](bool allow_sign) -> long {
        std::size_t start = i;
        if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        std::size_t digits_from = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == digits_from) throw word_parse_error("expected an integer", start);
        long v = std::strtol(std::string(text.substr(start, i - start)).c_str(), nullptr, 10);
        return v;
    };
    while (i < text.size()) {
        if (text[i] != '[') throw word_parse_error("expected '['", i);
        ++i;
        std::vector<letter::entry> entries;
        while (true) {
            while (i < text.size() && text[i] == ' ') ++i;
            if (i >= text.size()) throw word_parse_error("unterminated bracket", i);
            if (text[i] == ']') break;
            std::size_t at = i;
            long dim = read_int(false);
            if (dim < 1) throw word_parse_error("dimension must be >= 1", at);
            long exp = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::size_t eat = i;
                exp = read_int(true);
                if (exp == 0) throw word_parse_error("exponent 0 is not allowed", eat);
            }
            entries.push_back({static_cast<int>(dim), static_cast<int>(exp)});
        }
        ++i;  // ']'
        if (entries.empty()) throw word_parse_error("empty bracket", i - 1);
        try {
            letters.push_back(letter(std::move(entries)));
        } catch (const degenerate_bracket&) {
            throw word_parse_error("bracket cancels to nothing", i - 1);
        }
    }
    return word(std::move(letters));
}

/// Composition of a positive integer: parts >= 1. The empty composition is
/// the empty word's image.
using composition = std::vector<int>;

/// One-dimensional word [1^a1][1^a2]...[1^ak] (or over the given dimension).
inline word word_from_composition(const composition& alpha, int dim = 1) {
    std::vector<letter> ls;
    ls.reserve(alpha.size());
    for (int part : alpha) {
        if (part < 1) throw std::invalid_argument("composition parts must be >= 1");
        ls.push_back(letter::single(dim, part));
    }
    return word(std::move(ls));
}

/// Inverse of word_from_composition on one-dimensional standard words.
inline composition composition_from_word(const word& w, int dim = 1) {
    composition alpha;
    alpha.reserve(w.length());
    for (const letter& a : w.letters()) {
        if (a.entries().size() != 1 || a.entries()[0].first != dim || a.entries()[0].second < 1)
            throw std::invalid_argument("word is not a one-dimensional standard word: " + print_word(w));
        alpha.push_back(a.entries()[0].second);
    }
    return alpha;
}

/**
 * All ordered splits of w into `parts` (possibly empty) words whose
 * concatenation is w. The result has C(length + parts - 1, parts - 1)
 * entries, ordered lexicographically by split positions.
 */
inline std::vector<std::vector<word>> deconcatenations(const word& w, std::size_t parts) {
    if (parts == 0)
        return w.empty() ? std::vector<std::vector<word>>{{}} : std::vector<std::vector<word>>{};
    std::vector<std::vector<word>> out;
    std::vector<std::size_t> cuts(parts - 1);
    auto rec = [&](auto&& self, std::size_t slot, std::size_t from) -> void {
        if (slot == parts - 1) {
            std::vector<word> split;
            split.reserve(parts);
            std::size_t prev = 0;
            for (std::size_t c : cuts) {
                split.push_back(w.factor(prev, c - prev));
                prev = c;
            }
            split.push_back(w.factor(prev, w.length() - prev));
            out.push_back(std::move(split));
            return;
        }
        for (std::size_t c = from; c <= w.length(); ++c) {
            cuts[slot] = c;
            self(self, slot + 1, c);
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// Proper and improper prefixes of w, ascending by length (includes "").
inline std::vector<word> prefixes(const word& w) {
    std::vector<word> out;
    out.reserve(w.length() + 1);
    for (std::size_t n = 0; n <= w.length(); ++n) out.push_back(w.prefix(n));
    return out;
}

/// Suffixes of w, ascending by start (w itself first, "" last).
inline std::vector<word> suffixes(const word& w) {
    std::vector<word> out;
    out.reserve(w.length() + 1);
    for (std::size_t n = 0; n <= w.length(); ++n) out.push_back(w.suffix_from(n));
    return out;
}

/// Distinct contiguous factors of w, including the empty word.
inline std::vector<word> factors(const word& w) {
    std::vector<word> out;
    out.push_back(word{});
    for (std::size_t i = 0; i < w.length(); ++i)
        for (std::size_t n = 1; i + n <= w.length(); ++n) out.push_back(w.factor(i, n));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Column order for reports: weight, then length, then canonical text.
inline bool feature_less(const word& a, const word& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    if (a.length() != b.length()) return a.length() < b.length();
    return print_word(a) < print_word(b);
}

}  // namespace semisig
