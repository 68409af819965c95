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

#include <catch2/catch_amalgamated.hpp>

#include "semisig/words.hpp"

using namespace semisig;

TEST_CASE("letters canonicalize on construction", "[words]") {
    SECTION("sorted, merged, zero-free") {
        const letter a({{2, 1}, {1, 3}, {2, 2}});
        REQUIRE(a.entries().size() == 2);
        CHECK(a.entries()[0] == letter::entry{1, 3});
        CHECK(a.entries()[1] == letter::entry{2, 3});
        CHECK(a.weight() == 6);
        CHECK(a == letter({{1, 3}, {2, 3}}));
    }
    SECTION("cancellation to nothing is degenerate") {
        CHECK_THROWS_AS(letter({{1, 2}, {1, -2}}), degenerate_bracket);
    }
    SECTION("weight counts absolute exponents") {
        CHECK(letter({{1, -2}, {3, 1}}).weight() == 3);
        CHECK_FALSE(letter({{1, -2}, {3, 1}}).standard());
        CHECK(letter::single(1, 7).standard());
    }
    SECTION("dimensions start at 1") {
        CHECK_THROWS_AS(letter({{0, 1}}), std::invalid_argument);
    }
}

TEST_CASE("bracket_merge adds exponents pointwise", "[words]") {
    const letter ab = bracket_merge(letter::single(1, 7), letter::single(1, 4));
    CHECK(ab == letter::single(1, 11));
    CHECK(bracket_merge(letter::single(1), letter::single(2)) == letter({{1, 1}, {2, 1}}));
    CHECK_THROWS_AS(bracket_merge(letter::single(1, 2), letter::single(1, -2)),
                    degenerate_bracket);
}

TEST_CASE("word parsing and printing round-trip", "[words]") {
    for (const char* text : {"", "[1]", "[1^7][1^4]", "[1 2^3]", "[2^-1]", "[1^7][1][1^4]",
                             "[2 10]", "[1^-2 3]"}) {
        CAPTURE(text);
        CHECK(print_word(parse_word(text)) == text);
    }
    SECTION("non-canonical spellings normalize") {
        CHECK(print_word(parse_word("[2^3 1]")) == "[1 2^3]");
        CHECK(print_word(parse_word("[10 2]")) == "[2 10]");
        CHECK(print_word(parse_word("[1^1]")) == "[1]");
        CHECK(print_word(parse_word("[ 1  2 ]")) == "[1 2]");
        CHECK(parse_word("[1 1]") == parse_word("[1^2]"));
    }
    SECTION("parse errors carry byte offsets") {
        CHECK_THROWS_AS(parse_word("x"), word_parse_error);
        CHECK_THROWS_AS(parse_word("[1"), word_parse_error);
        CHECK_THROWS_AS(parse_word("[]"), word_parse_error);
        CHECK_THROWS_AS(parse_word("[1^0]"), word_parse_error);
        CHECK_THROWS_AS(parse_word("[0]"), word_parse_error);
        CHECK_THROWS_AS(parse_word("[1^2 1^-2]"), word_parse_error);  // degenerate after merge
        try {
            parse_word("[1][x]");
            FAIL("expected word_parse_error");
        } catch (const word_parse_error& e) {
            CHECK(e.offset == 4);
        }
    }
}

TEST_CASE("word structure accessors", "[words]") {
    const word w = parse_word("[1^7][1][1^4]");
    CHECK(w.length() == 3);
    CHECK(w.weight() == 12);
    CHECK(w.max_dimension() == 1);
    CHECK(w.prefix(2) == parse_word("[1^7][1]"));
    CHECK(w.suffix_from(1) == parse_word("[1][1^4]"));
    CHECK(w.factor(1, 1) == parse_word("[1]"));
    CHECK(w.prefix(0) == word{});
    CHECK(parse_word("[1^7]") + parse_word("[1][1^4]") == w);
    CHECK(word{}.empty());
    CHECK(word{}.weight() == 0);
}

TEST_CASE("compositions map to one-dimensional words", "[words]") {
    const composition alpha{7, 1, 4};
    CHECK(word_from_composition(alpha) == parse_word("[1^7][1][1^4]"));
    CHECK(composition_from_word(parse_word("[1^7][1][1^4]")) == alpha);
    CHECK(word_from_composition({}) == word{});
    CHECK(composition_from_word(word{}).empty());
    CHECK(word_from_composition({2, 1}, 3) == parse_word("[3^2][3]"));
    CHECK_THROWS_AS(composition_from_word(parse_word("[1 2]")), std::invalid_argument);
    CHECK_THROWS_AS(composition_from_word(parse_word("[1^-2]")), std::invalid_argument);
    CHECK_THROWS_AS(word_from_composition({2, 0}), std::invalid_argument);
}

TEST_CASE("deconcatenations enumerate ordered splits", "[words]") {
    const word w = parse_word("[1][2]");
    SECTION("two parts of a length-2 word") {
        const auto splits = deconcatenations(w, 2);
        REQUIRE(splits.size() == 3);
        CHECK(splits[0] == std::vector<word>{word{}, w});
        CHECK(splits[1] == std::vector<word>{parse_word("[1]"), parse_word("[2]")});
        CHECK(splits[2] == std::vector<word>{w, word{}});
    }
    SECTION("count is C(len + parts - 1, parts - 1)") {
        CHECK(deconcatenations(w, 3).size() == 6);
        CHECK(deconcatenations(parse_word("[1][1][1]"), 2).size() == 4);
        CHECK(deconcatenations(word{}, 2).size() == 1);
    }
    SECTION("zero parts only fit the empty word") {
        CHECK(deconcatenations(word{}, 0).size() == 1);
        CHECK(deconcatenations(w, 0).empty());
    }
    SECTION("every split concatenates back to w") {
        for (const auto& split : deconcatenations(w, 3)) {
            word cat;
            for (const word& part : split) cat = cat + part;
            CHECK(cat == w);
        }
    }
}

TEST_CASE("prefixes, suffixes and factors", "[words]") {
    const word w = parse_word("[1][2][1]");
    CHECK(prefixes(w).size() == 4);
    CHECK(prefixes(w).front() == word{});
    CHECK(prefixes(w).back() == w);
    CHECK(suffixes(w).front() == w);
    CHECK(suffixes(w).back() == word{});
    // distinct factors of [1][2][1]: e, [1], [2], [1][2], [2][1], [1][2][1]
    CHECK(factors(w).size() == 6);
    CHECK(factors(parse_word("[1][1]")).size() == 3);
}

TEST_CASE("feature order sorts by weight, length, text", "[words]") {
    std::vector<word> ws{parse_word("[2]"), parse_word("[1][1]"), parse_word("[1^2]"),
                         parse_word("[1]"), word{}};
    std::sort(ws.begin(), ws.end(), feature_less);
    CHECK(ws[0] == word{});
    CHECK(ws[1] == parse_word("[1]"));
    CHECK(ws[2] == parse_word("[2]"));
    CHECK(ws[3] == parse_word("[1^2]"));
    CHECK(ws[4] == parse_word("[1][1]"));
}
