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

#include <random>
#include <vector>

#include "semisig/signature.hpp"
#include "support.hpp"

using namespace semisig;

namespace {

time_series<min_plus> mp_series(std::vector<double> xs) {
    std::vector<std::vector<double>> rows;
    for (double x : xs) rows.push_back({x});
    return time_series<min_plus>::from_reals(min_plus{}, 1, rows);
}

template <semiring S>
void dp_matches_bruteforce(const S& s, unsigned seed) {
    std::mt19937 rng(seed);
    for (int round = 0; round < 12; ++round) {
        const std::size_t dim = 1 + rng() % 2;
        const auto z = testing::random_series(s, rng, 2 + rng() % 6, dim);
        const word w = testing::random_standard_word(rng, rng() % 4, static_cast<int>(dim), 2);
        const std::size_t sfrom = rng() % (z.length() + 1);
        const std::size_t tto = sfrom + rng() % (z.length() - sfrom + 1);
        CAPTURE(s.id(), print_word(w), sfrom, tto);
        CHECK(iss(z, w, sfrom, tto) == iss_bruteforce(z, w, sfrom, tto));
    }
}

}  // namespace

TEST_CASE("time_series validates its layout", "[signature]") {
    const min_plus s;
    CHECK_THROWS_AS(time_series<min_plus>(s, 0, {}), std::invalid_argument);
    CHECK_THROWS_AS(time_series<min_plus>(s, 2, {xreal::of(1)}), std::invalid_argument);
    CHECK_THROWS_AS(time_series<min_plus>::from_reals(s, 2, {{1.0}}), std::invalid_argument);
    const auto z = time_series<min_plus>::from_reals(s, 2, {{1.0, 2.0}, {3.0, 4.0}});
    CHECK(z.length() == 2);
    CHECK(z.at(2, 1) == xreal::of(3.0));
}

TEST_CASE("letter evaluation multiplies coordinate powers", "[signature]") {
    const auto z = time_series<natural>(natural{}, 2,
                                        {natural::value_type(2), natural::value_type(3),
                                         natural::value_type(5), natural::value_type(7)});
    CHECK(letter_eval(z, 1, parse_word("[1^3]")[0]) == natural::value_type(8));
    CHECK(letter_eval(z, 2, parse_word("[1 2^2]")[0]) == natural::value_type(245));
    CHECK_THROWS_AS(letter_eval(z, 1, parse_word("[3]")[0]), std::out_of_range);
    CHECK_THROWS_AS(letter_eval(z, 5, parse_word("[1]")[0]), std::out_of_range);
    CHECK_THROWS_AS(letter_eval(z, 1, parse_word("[1^-1]")[0]), std::invalid_argument);
}

TEST_CASE("strict signature of z = (1, -3, 2) over min-plus", "[signature]") {
    const auto z = mp_series({1, -3, 2});
    SECTION("first order is the running minimum") {
        const auto table = iss_dp(z, parse_word("[1]"), 0, 3);
        CHECK(table.at(1, 1) == xreal::of(1));
        CHECK(table.at(1, 2) == xreal::of(-3));
        CHECK(table.at(1, 3) == xreal::of(-3));
        CHECK(table.at(0, 2) == xreal::of(0));  // empty word row
    }
    SECTION("second and third order frozen values") {
        CHECK(iss(z, parse_word("[1][1]"), 0, 3) == xreal::of(-2));
        // pairs (7+4, 7-12, -21+8): -13 is the best
        CHECK(iss(z, parse_word("[1^7][1^4]"), 0, 3) == xreal::of(-13));
        CHECK(iss(z, parse_word("[1^7][1][1^4]"), 0, 3) == xreal::of(12));
    }
    SECTION("empty word and empty windows") {
        CHECK(iss(z, word{}, 0, 3) == xreal::of(0));
        CHECK(iss(z, parse_word("[1]"), 2, 2) == min_plus{}.zero());
        CHECK(iss(z, word{}, 2, 2) == xreal::of(0));
    }
    SECTION("window and word validation") {
        CHECK_THROWS_AS(iss(z, parse_word("[1]"), 2, 1), std::out_of_range);
        CHECK_THROWS_AS(iss(z, parse_word("[1]"), 0, 4), std::out_of_range);
        CHECK_THROWS_AS(iss(z, parse_word("[1^-1]"), 0, 3), std::invalid_argument);
        CHECK_THROWS_AS(iss_bruteforce(z, parse_word("[1^-1]"), 0, 3), std::invalid_argument);
    }
}

TEST_CASE("DP and brute force agree on every semiring", "[signature][property]") {
    dp_matches_bruteforce(min_plus{}, 1);
    dp_matches_bruteforce(max_plus{}, 2);
    dp_matches_bruteforce(boolean{}, 3);
    dp_matches_bruteforce(viterbi{}, 4);
    dp_matches_bruteforce(bottleneck{}, 5);
    dp_matches_bruteforce(natural{}, 6);
    dp_matches_bruteforce(real_field{}, 7);
    dp_matches_bruteforce(expectation(2), 8);
}

TEST_CASE("signatures track the prefix closure", "[signature]") {
    const auto z = mp_series({1, -3, 2});
    const std::vector<word> words{parse_word("[1^7][1][1^4]")};
    const auto sig = compute_signature(z, std::span<const word>(words), 0, 3);
    CHECK(sig.contains(word{}));
    CHECK(sig.contains(parse_word("[1^7]")));
    CHECK(sig.contains(parse_word("[1^7][1]")));
    CHECK(sig.at(word{}) == xreal::of(0));
    CHECK(sig.at(parse_word("[1^7][1][1^4]")) == xreal::of(12));
    CHECK_FALSE(sig.contains(parse_word("[1]")));
    CHECK_THROWS_AS(sig.at(parse_word("[1]")), std::out_of_range);
    CHECK_THROWS_WITH(sig.at(parse_word("[1]")), Catch::Matchers::ContainsSubstring("does not track"));
}

TEST_CASE("Chen's identity splits windows", "[signature]") {
    const auto z = mp_series({1, -3, 2, 5});
    const word w = parse_word("[1][1]");
    const std::vector<word> words{w};

    SECTION("worked split at r = 2") {
        const auto left = compute_signature(z, std::span<const word>(words), 0, 2);
        const auto right = compute_signature(z, std::span<const word>(words), 2, 4);
        // min(0 + 7, -3 + 2, -2 + 0) = -2
        CHECK(chen_combine(left, right, w) == xreal::of(-2));
        CHECK(chen_combine(left, right, w) == iss(z, w, 0, 4));
    }
    SECTION("every interior split point") {
        for (std::size_t r = 0; r <= 4; ++r) {
            const auto left = compute_signature(z, std::span<const word>(words), 0, r);
            const auto right = compute_signature(z, std::span<const word>(words), r, 4);
            CAPTURE(r);
            CHECK(chen_combine(left, right, w) == iss(z, w, 0, 4));
        }
    }
    SECTION("non-adjacent windows are rejected") {
        const auto left = compute_signature(z, std::span<const word>(words), 0, 1);
        const auto right = compute_signature(z, std::span<const word>(words), 2, 4);
        CHECK_THROWS_AS(chen_combine(left, right, w), std::invalid_argument);
    }
    SECTION("the three-letter word splits into four products") {
        CHECK(deconcatenations(parse_word("[1^7][1][1^4]"), 2).size() == 4);
    }
}

TEST_CASE("products of coefficients follow the quasi-shuffle", "[signature][property]") {
    auto check_semiring = [](auto s, unsigned seed) {
        std::mt19937 rng(seed);
        using S = decltype(s);
        for (int round = 0; round < 8; ++round) {
            const auto z = testing::random_series(s, rng, 2 + rng() % 5, 2);
            const word u = testing::random_standard_word(rng, rng() % 3, 2, 2);
            const word v = testing::random_standard_word(rng, rng() % 2, 2, 2);
            // track the prefix closure of every word in u ** v
            std::vector<word> words;
            for (const auto& [w, m] : quasi_shuffle(u, v)) words.push_back(w);
            words.push_back(u);
            words.push_back(v);
            const auto sig = compute_signature(z, std::span<const word>(words), 0, z.length());
            CAPTURE(s.id(), print_word(u), print_word(v));
            CHECK(s.mul(sig.at(u), sig.at(v)) == eval_wordsum(sig, quasi_shuffle(u, v)));
        }
    };
    check_semiring(min_plus{}, 11);
    check_semiring(max_plus{}, 12);
    check_semiring(boolean{}, 13);
    check_semiring(viterbi{}, 14);
    check_semiring(natural{}, 15);
    check_semiring(bottleneck{}, 16);
    check_semiring(expectation(2), 17);
}

TEST_CASE("inserting a zero entry never changes the signature", "[signature][property]") {
    std::mt19937 rng(21);
    const min_plus s;
    const auto words = testing::standard_words(2, 3, 4);
    for (int round = 0; round < 6; ++round) {
        const auto z = testing::random_series(s, rng, 3 + rng() % 4, 2);
        const auto sig = compute_signature(z, std::span<const word>(words), 0, z.length());
        for (std::size_t n = 1; n <= z.length() + 1; ++n) {
            const auto padded = insert_zero_series(z, n);
            const auto padded_sig =
                compute_signature(padded, std::span<const word>(words), 0, padded.length());
            CAPTURE(round, n);
            CHECK(padded_sig.coefficients() == sig.coefficients());
        }
    }
    CHECK_THROWS_AS(insert_zero_series(mp_series({1}), 3), std::out_of_range);
    CHECK_THROWS_AS(insert_zero_series(mp_series({1}), 0), std::out_of_range);
}

TEST_CASE("reconstruction recovers the compression", "[signature]") {
    const min_plus s;
    SECTION("worked example with a padded middle entry") {
        // z = (2, 0_S, -1): compression is (2, -1)
        const auto z = time_series<min_plus>(
            s, 1, {xreal::of(2), s.zero(), xreal::of(-1)});
        const auto words = reconstruction_words(4);
        const auto sig = compute_signature(z, std::span<const word>(words), 0, 3);
        CHECK(sig.at(parse_word("[1][1]")) == xreal::of(1));
        CHECK(sig.at(parse_word("[1^2][1]")) == xreal::of(3));
        CHECK(sig.at(parse_word("[1][1^2]")) == xreal::of(0));
        const auto back = reconstruct_compressed(sig);
        REQUIRE(back.size() == 2);
        CHECK(back[0] == xreal::of(2));
        CHECK(back[1] == xreal::of(-1));
    }
    SECTION("all-zero series compresses to nothing") {
        const auto z = time_series<min_plus>(s, 1, {s.zero(), s.zero()});
        const auto words = reconstruction_words(3);
        const auto sig = compute_signature(z, std::span<const word>(words), 0, 2);
        CHECK(reconstruct_compressed(sig).empty());
    }
    SECTION("round trip on generic series") {
        std::mt19937 rng(33);
        for (int round = 0; round < 10; ++round) {
            // distinct multiples of 0.5 keep min-plus sums tie-free and exact
            std::vector<double> xs;
            std::vector<int> grid;
            for (int k = -8; k <= 8; ++k) grid.push_back(k);
            std::shuffle(grid.begin(), grid.end(), rng);
            const std::size_t len = 2 + rng() % 4;
            for (std::size_t i = 0; i < len; ++i) xs.push_back(grid[i] / 2.0);
            const auto z = mp_series(xs);
            const auto words = reconstruction_words(len + 1);
            const auto sig = compute_signature(z, std::span<const word>(words), 0, len);
            const auto back = reconstruct_compressed(sig);
            REQUIRE(back.size() == len);
            for (std::size_t i = 0; i < len; ++i) CHECK(back[i] == xreal::of(xs[i]));
        }
    }
    SECTION("inconsistent coefficients are not a signature") {
        const natural n;
        std::map<word, natural::value_type> bogus;
        bogus[parse_word("[1]")] = 2;
        bogus[parse_word("[1][1]")] = 0;
        bogus[parse_word("[1^2]")] = 3;  // not divisible by 2
        const signature<natural> sig(n, 0, 1, std::move(bogus));
        CHECK_THROWS_AS(reconstruct_compressed(sig), std::domain_error);
    }
}

TEST_CASE("equal signatures needn't have equal compressions with zero divisors",
          "[signature]") {
    // (0,g) * (0,h) = (0,0): two zero divisors erase each other, so the
    // signature cannot see their order.
    const expectation s(1);
    const expectation_value a{0.0, {1.0}};
    const expectation_value b{0.0, {2.0}};
    const time_series<expectation> z(s, 1, {a, b, s.zero()});
    const time_series<expectation> zp(s, 1, {b, a, s.zero()});
    const auto words = testing::standard_words(1, 3, 3);
    const auto sig = compute_signature(z, std::span<const word>(words), 0, 3);
    const auto sigp = compute_signature(zp, std::span<const word>(words), 0, 3);
    CHECK(sig.coefficients() == sigp.coefficients());
    // yet the compressions (the non-zero entries in order) differ
    CHECK_FALSE(std::vector<expectation_value>{a, b} == std::vector<expectation_value>{b, a});
}
