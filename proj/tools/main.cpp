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

// semisig-cli: batch feature extraction for semiring signatures.
//
//   semisig-cli --input corpus.csv --semiring min-plus --words "[1]" --words "[1^7][1^4]"
//   semisig-cli --input corpus.csv --max-length 2 --max-weight 3 --format json
//   semisig-cli --generate 4:8:2 --seed 7 --output corpus.csv
//   semisig-cli --input one.csv --words "[1][2]" --index-build idx.json
//   semisig-cli --index-file idx.json --index-query 3:15 --words "[2]"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "semisig/semisig.hpp"

namespace {

std::pair<std::size_t, std::size_t> parse_span(const std::string& text, const char* flag) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError(flag, "expected s:t, got '" + text + "'");
    try {
        const std::size_t s = std::stoull(text.substr(0, colon));
        const std::size_t t = std::stoull(text.substr(colon + 1));
        return {s, t};
    } catch (const std::exception&) {
        throw CLI::ValidationError(flag, "expected s:t with integers, got '" + text + "'");
    }
}

void write_output(const std::optional<std::string>& path, const std::string& text) {
    if (!path) {
        std::cout << text;
        return;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + *path);
    out << text;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semiring signature features for time series"};

    std::string input;
    semisig::job_config cfg;
    std::string mode_text = "strict";
    std::string preprocess_text = "none";
    std::string format_text = "csv";
    std::string interval_text;
    std::optional<std::string> output;
    std::string generate_spec;
    std::uint64_t seed = 1;
    std::string index_build;
    std::string index_query;
    std::string index_file;

    app.add_option("--input", input, "input corpus CSV (header id,x1..xd or x1..xd)");
    app.add_option("--semiring", cfg.semiring_id,
                   "semiring id: min-plus max-plus boolean viterbi bottleneck natural real "
                   "expectation:<d>")
        ->capture_default_str();
    app.add_option("--mode", mode_text, "strict | nonstrict")->capture_default_str();
    // allow_extra_args(false): one word per flag instance, so bracket texts
    // like "[1]" are not split as container literals.
    app.add_option("--words", cfg.word_texts,
                   "explicit word, repeatable; e denotes the empty word")
        ->allow_extra_args(false);
    app.add_option("--max-length", cfg.max_length, "generated words: max length")
        ->capture_default_str();
    app.add_option("--max-weight", cfg.max_weight, "generated words: max weight")
        ->capture_default_str();
    app.add_option("--interval", interval_text, "restrict to the window (s, t]");
    app.add_option("--preprocess", preprocess_text, "none | log-increment")
        ->capture_default_str();
    app.add_option("--format", format_text, "csv | json")->capture_default_str();
    app.add_flag("--witnesses", cfg.witnesses,
                 "emit optimal index tuples (min-plus/max-plus, strict)");
    app.add_option("--witness-cap", cfg.witness_cap, "max window length for witness search")
        ->capture_default_str();
    app.add_option("--output", output, "write to this file instead of stdout");
    app.add_option("--generate", generate_spec, "emit a demo corpus, format count:length:dim");
    app.add_option("--seed", seed, "seed for --generate")->capture_default_str();
    app.add_option("--index-build", index_build, "build a dyadic interval index, write JSON here");
    app.add_option("--index-query", index_query, "query an index for the window s:t");
    app.add_option("--index-file", index_file, "index JSON for --index-query");

    CLI11_PARSE(app, argc, argv);

    try {
        if (mode_text == "strict") {
            cfg.mode = semisig::sig_mode::strict;
        } else if (mode_text == "nonstrict") {
            cfg.mode = semisig::sig_mode::nonstrict;
        } else {
            throw std::invalid_argument("--mode must be strict or nonstrict, got '" + mode_text +
                                        "'");
        }
        if (preprocess_text == "none") {
            cfg.preprocess = semisig::job_config::preprocess_kind::none;
        } else if (preprocess_text == "log-increment") {
            cfg.preprocess = semisig::job_config::preprocess_kind::log_increment;
        } else {
            throw std::invalid_argument("--preprocess must be none or log-increment, got '" +
                                        preprocess_text + "'");
        }
        if (format_text == "csv") {
            cfg.format = semisig::job_config::output_format::csv;
        } else if (format_text == "json") {
            cfg.format = semisig::job_config::output_format::json;
        } else {
            throw std::invalid_argument("--format must be csv or json, got '" + format_text + "'");
        }
        if (!interval_text.empty()) cfg.window = parse_span(interval_text, "--interval");

        if (!generate_spec.empty()) {
            const auto first = generate_spec.find(':');
            const auto second = generate_spec.find(':', first + 1);
            if (first == std::string::npos || second == std::string::npos)
                throw std::invalid_argument("--generate expects count:length:dim, got '" +
                                            generate_spec + "'");
            const auto count = std::stoull(generate_spec.substr(0, first));
            const auto length = std::stoull(generate_spec.substr(first + 1, second - first - 1));
            const auto dim = std::stoull(generate_spec.substr(second + 1));
            write_output(output, semisig::corpus_to_csv(
                                     semisig::generate_corpus(count, length, dim, seed)));
            return 0;
        }

        if (!index_build.empty()) {
            if (input.empty()) throw std::invalid_argument("--index-build needs --input");
            if (cfg.word_texts.size() != 1)
                throw std::invalid_argument("--index-build needs exactly one --words entry");
            const auto corpus = semisig::load_csv_file(input);
            if (corpus.series.size() != 1)
                throw std::invalid_argument("--index-build needs a single-series corpus, found " +
                                            std::to_string(corpus.series.size()));
            const semisig::word w = semisig::parse_cli_word(cfg.word_texts[0]);
            const std::string text = semisig::dispatch_semiring(
                cfg.semiring_id, [&](auto ops) -> std::string {
                    using S = decltype(ops);
                    const auto z = semisig::time_series<S>::from_reals(
                        ops, corpus.dimension, corpus.series[0].rows);
                    const auto index = semisig::dyadic_index<S>::build(z, w);
                    return semisig::index_to_json(index).dump(2) + "\n";
                });
            std::ofstream out(index_build, std::ios::binary);
            if (!out) throw std::runtime_error("cannot open output file: " + index_build);
            out << text;
            return 0;
        }

        if (!index_query.empty()) {
            if (index_file.empty()) throw std::invalid_argument("--index-query needs --index-file");
            const auto [qs, qt] = parse_span(index_query, "--index-query");
            const auto doc = nlohmann::json::parse(slurp(index_file));
            const std::string id = doc.at("semiring").get<std::string>();
            const std::string text =
                semisig::dispatch_semiring(id, [&](auto ops) -> std::string {
                    using S = decltype(ops);
                    const auto index = semisig::index_from_json<S>(ops, doc);
                    const semisig::word v = cfg.word_texts.empty()
                                                ? index.tracked_word()
                                                : semisig::parse_cli_word(cfg.word_texts[0]);
                    return semisig::display_word(v) + "," +
                           ops.to_text(index.query(qs, qt, v)) + "\n";
                });
            write_output(output, text);
            return 0;
        }

        if (input.empty()) throw std::invalid_argument("--input is required (see --help)");
        const auto corpus = semisig::load_csv_file(input);
        write_output(output, semisig::run_job(corpus, cfg));
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
