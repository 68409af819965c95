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
 * @file serialize.hpp
 *
 * Versioned JSON container for the dyadic interval index, plus the JSON
 * encoding of semiring values. Doubles round-trip exactly (shortest
 * representation); infinities and big integers travel as strings, so the
 * documents stay standard JSON.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "semisig/interval_index.hpp"
#include "semisig/semiring.hpp"
#include "semisig/words.hpp"

namespace semisig {

inline constexpr const char* k_index_format = "semisig.dyadic-index";
inline constexpr int k_index_version = 1;

inline nlohmann::json value_to_json(const xreal& v) {
    if (v.is_plus_infinity()) return "inf";
    if (v.is_minus_infinity()) return "-inf";
    return v.value();
}
inline nlohmann::json value_to_json(double v) { return v; }
inline nlohmann::json value_to_json(bool v) { return v; }
inline nlohmann::json value_to_json(const boost::multiprecision::cpp_int& v) { return v.str(); }
inline nlohmann::json value_to_json(const expectation_value& v) {
    return nlohmann::json{{"mass", v.mass}, {"grad", v.grad}};
}

template <typename V>
V value_from_json(const nlohmann::json& j);

template <>
inline xreal value_from_json<xreal>(const nlohmann::json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "inf") return xreal::plus_infinity();
        if (s == "-inf") return xreal::minus_infinity();
        throw std::invalid_argument("bad extended-real literal: " + s);
    }
    return xreal::of(j.get<double>());
}
template <>
inline double value_from_json<double>(const nlohmann::json& j) {
    return j.get<double>();
}
template <>
inline bool value_from_json<bool>(const nlohmann::json& j) {
    return j.get<bool>();
}
template <>
inline boost::multiprecision::cpp_int value_from_json<boost::multiprecision::cpp_int>(
    const nlohmann::json& j) {
    return boost::multiprecision::cpp_int(j.get<std::string>());
}
template <>
inline expectation_value value_from_json<expectation_value>(const nlohmann::json& j) {
    return {j.at("mass").get<double>(), j.at("grad").get<std::vector<double>>()};
}

/// Header (length, levels, semiring, word, factor list) followed by the
/// blocks in level-major order, one value per tracked factor.
template <semiring S>
nlohmann::json index_to_json(const dyadic_index<S>& idx) {
    nlohmann::json j;
    j["format"] = k_index_format;
    j["version"] = k_index_version;
    j["semiring"] = idx.ops().id();
    j["length"] = idx.length();
    j["levels"] = idx.levels();
    j["word"] = print_word(idx.tracked_word());
    nlohmann::json factors = nlohmann::json::array();
    for (const word& f : idx.tracked_factors()) factors.push_back(print_word(f));
    j["factors"] = std::move(factors);
    nlohmann::json blocks = nlohmann::json::array();
    for (std::size_t n = 0; n <= idx.levels(); ++n) {
        nlohmann::json level = nlohmann::json::array();
        for (std::size_t b = 0; b < (idx.horizon() >> n); ++b) {
            nlohmann::json cells = nlohmann::json::array();
            for (const word& f : idx.tracked_factors())
                cells.push_back(value_to_json(idx.block_value(n, b, f)));
            level.push_back(std::move(cells));
        }
        blocks.push_back(std::move(level));
    }
    j["blocks"] = std::move(blocks);
    return j;
}

template <semiring S>
dyadic_index<S> index_from_json(const S& ops, const nlohmann::json& j) {
    if (j.at("format").get<std::string>() != k_index_format)
        throw std::invalid_argument("index document has the wrong format tag");
    if (j.at("version").get<int>() != k_index_version)
        throw std::invalid_argument("unsupported index version " +
                                    std::to_string(j.at("version").get<int>()));
    if (j.at("semiring").get<std::string>() != ops.id())
        throw std::invalid_argument("index was built over semiring '" +
                                    j.at("semiring").get<std::string>() + "', not '" + ops.id() +
                                    "'");
    const auto length = j.at("length").get<std::size_t>();
    const auto levels = j.at("levels").get<std::size_t>();
    const word w = parse_word(j.at("word").get<std::string>());
    std::vector<word> factor_list;
    for (const auto& f : j.at("factors")) factor_list.push_back(parse_word(f.get<std::string>()));
    std::vector<std::vector<value_t<S>>> blocks;
    for (const auto& level : j.at("blocks")) {
        std::vector<value_t<S>> flat;
        for (const auto& cells : level)
            for (const auto& cell : cells) flat.push_back(value_from_json<value_t<S>>(cell));
        blocks.push_back(std::move(flat));
    }
    return dyadic_index<S>::from_parts(ops, length, levels, w, std::move(factor_list),
                                       std::move(blocks));
}

}  // namespace semisig
