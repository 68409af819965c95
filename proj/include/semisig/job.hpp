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
 * @file job.hpp
 *
 * Feature-extraction jobs: CSV corpora in, one feature row per series out.
 * The command line tool is a thin wrapper over run_job so results can be
 * cross-checked in-process.
 *
 * Input CSV: a header row naming the coordinates x1..xd, optionally
 * preceded by an "id" column (long format, several series per file).
 * Output: CSV (one row per series, one column per word, sorted by weight,
 * length, text) or a JSON document with the same content. The additive
 * zero prints in the semiring's own text form ("inf" for min-plus).
 */

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"

#include "semisig/idem.hpp"
#include "semisig/semiring.hpp"
#include "semisig/serialize.hpp"
#include "semisig/signature.hpp"
#include "semisig/words.hpp"

namespace semisig {

struct csv_error : std::runtime_error {
    csv_error(std::size_t at, const std::string& msg)
        : std::runtime_error("csv line " + std::to_string(at) + ": " + msg), line(at) {}
    std::size_t line;
};

struct series_data {
    std::string id;
    std::vector<std::vector<double>> rows;
};

struct csv_corpus {
    std::size_t dimension = 0;
    std::vector<series_data> series;
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    out.push_back(cur);
    for (std::string& tok : out) {
        const auto b = tok.find_first_not_of(" \t");
        const auto e = tok.find_last_not_of(" \t");
        tok = b == std::string::npos ? std::string{} : tok.substr(b, e - b + 1);
    }
    return out;
}

inline double parse_csv_number(const std::string& tok, std::size_t line) {
    if (tok.empty()) throw csv_error(line, "missing value");
    double v = 0.0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last)
        throw csv_error(line, "bad number '" + tok + "'");
    return v;
}

}  // namespace detail

/// Reads the corpus format described in the file header comment.
inline csv_corpus load_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw csv_error(1, "missing header row");
    auto header = detail::split_csv_line(line);
    const bool long_format = !header.empty() && header[0] == "id";
    const std::size_t first_dim = long_format ? 1 : 0;
    const std::size_t d = header.size() - first_dim;
    if (d == 0) throw csv_error(1, "no coordinate columns");
    for (std::size_t i = 0; i < d; ++i) {
        const std::string want = "x" + std::to_string(i + 1);
        if (header[first_dim + i] != want)
            throw csv_error(1, "expected column '" + want + "', found '" + header[first_dim + i] + "'");
    }
    csv_corpus corpus;
    corpus.dimension = d;
    std::map<std::string, std::size_t> by_id;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        auto toks = detail::split_csv_line(line);
        if (toks.size() != header.size())
            throw csv_error(lineno, "expected " + std::to_string(header.size()) + " fields, found " +
                                        std::to_string(toks.size()));
        std::string id = long_format ? toks[0] : "1";
        if (long_format && id.empty()) throw csv_error(lineno, "missing series id");
        auto [it, fresh] = by_id.try_emplace(id, corpus.series.size());
        if (fresh) corpus.series.push_back({id, {}});
        std::vector<double> row(d);
        for (std::size_t i = 0; i < d; ++i)
            row[i] = detail::parse_csv_number(toks[first_dim + i], lineno);
        corpus.series[it->second].rows.push_back(std::move(row));
    }
    if (corpus.series.empty()) throw csv_error(lineno + 1, "no data rows");
    return corpus;
}

inline csv_corpus load_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return load_csv(in);
}

struct job_config {
    std::string semiring_id = "min-plus";
    sig_mode mode = sig_mode::strict;
    std::vector<std::string> word_texts;  // empty: use the generator bounds
    std::size_t max_length = 2;
    std::size_t max_weight = 3;
    std::optional<std::pair<std::size_t, std::size_t>> window;  // (s, t]
    enum class preprocess_kind { none, log_increment };
    preprocess_kind preprocess = preprocess_kind::none;
    enum class output_format { csv, json };
    output_format format = output_format::csv;
    bool witnesses = false;
    std::size_t witness_cap = 64;
};

/// "e" denotes the empty word on the command line.
inline std::string display_word(const word& w) { return w.empty() ? "e" : print_word(w); }

inline word parse_cli_word(const std::string& text) {
    return text == "e" ? word{} : parse_word(text);
}

/// All words over dimensions 1..d with length and weight bounds, sorted by
/// weight, length, text; includes the empty word.
inline std::vector<word> generate_words(std::size_t dimension, std::size_t max_length,
                                        std::size_t max_weight) {
    if (dimension == 0) throw std::invalid_argument("generate_words: dimension must be >= 1");
    std::vector<letter> letters;
    std::vector<letter::entry> cur;
    auto rec_letter = [&](auto&& self, int dim, int remaining) -> void {
        if (dim > static_cast<int>(dimension)) {
            if (!cur.empty()) letters.push_back(letter(cur));
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            if (e > 0) cur.push_back({dim, e});
            self(self, dim + 1, remaining - e);
            if (e > 0) cur.pop_back();
        }
    };
    rec_letter(rec_letter, 1, static_cast<int>(max_weight));
    std::vector<word> out;
    std::vector<letter> stack;
    auto rec_word = [&](auto&& self, int remaining) -> void {
        out.push_back(word(stack));
        if (stack.size() == max_length) return;
        for (const letter& a : letters) {
            if (a.weight() > remaining) continue;
            stack.push_back(a);
            self(self, remaining - a.weight());
            stack.pop_back();
        }
    };
    rec_word(rec_word, static_cast<int>(max_weight));
    std::sort(out.begin(), out.end(), feature_less);
    return out;
}

/**
 * Lexicographically smallest index tuple attaining the strict signature
 * value; min-plus and max-plus only. nullopt when no tuple fits the
 * window. Enumeration cost is exponential in |w|; callers cap the window.
 */
template <semiring S>
    requires(std::same_as<S, min_plus> || std::same_as<S, max_plus>)
std::optional<std::vector<std::size_t>> emit_witnesses(const time_series<S>& z, const word& w,
                                                       std::size_t s, std::size_t t) {
    detail::check_window(s, t, z.length());
    if (!w.standard())
        throw std::invalid_argument("witnesses need a standard word: " + print_word(w));
    if (w.empty()) return std::vector<std::size_t>{};
    const std::size_t k = w.length();
    if (t - s < k) return std::nullopt;
    const auto eval = detail::letter_columns(z, w, s, t, false);
    std::optional<std::vector<std::size_t>> best;
    xreal best_v;
    std::vector<std::size_t> cur(k);
    auto rec = [&](auto&& self, std::size_t i, std::size_t j_prev, const xreal& partial) -> void {
        for (std::size_t j = j_prev + 1; j + (k - i - 1) <= t; ++j) {
            cur[i] = j;
            const xreal p = z.ops().mul(partial, eval[i][j - s - 1]);
            if (i + 1 == k) {
                bool better = !best.has_value();
                if constexpr (std::same_as<S, min_plus>) {
                    better = better || p < best_v;
                } else {
                    better = better || best_v < p;
                }
                if (better) {
                    best_v = p;
                    best = cur;
                }
            } else {
                self(self, i + 1, j, p);
            }
        }
    };
    rec(rec, 0, s, z.ops().one());
    return best;
}

namespace detail {

inline std::string format_witness(const std::optional<std::vector<std::size_t>>& w) {
    if (!w) return "-";
    std::string s = "(";
    for (std::size_t i = 0; i < w->size(); ++i) {
        if (i) s += ' ';
        s += std::to_string((*w)[i]);
    }
    return s + ")";
}

template <semiring S>
time_series<S> job_series(const S& ops, std::size_t dimension,
                          const std::vector<std::vector<double>>& rows,
                          job_config::preprocess_kind preprocess) {
    if (preprocess == job_config::preprocess_kind::log_increment) {
        if constexpr (!std::same_as<S, min_plus>) {
            throw std::invalid_argument("log-increment preprocessing targets min-plus, not '" +
                                        ops.id() + "'");
        } else {
            if (rows.empty()) throw std::invalid_argument("log-increment needs at least one row");
            std::vector<xreal> flat;
            flat.reserve((rows.size() - 1) * dimension);
            for (std::size_t n = 1; n < rows.size(); ++n) {
                if (rows[n].size() != dimension || rows[n - 1].size() != dimension)
                    throw std::invalid_argument("log-increment: row width mismatch");
                for (std::size_t i = 0; i < dimension; ++i) {
                    const double diff = rows[n][i] - rows[n - 1][i];
                    flat.push_back(diff == 0.0 ? ops.zero()
                                               : ops.from_real(-std::log(std::abs(diff))));
                }
            }
            return time_series<S>(ops, dimension, std::move(flat));
        }
    }
    return time_series<S>::from_reals(ops, dimension, rows);
}

template <semiring S, sig_mode M>
std::string run_job_typed(const S& ops, const csv_corpus& corpus, const job_config& cfg) {
    constexpr bool tropical = std::same_as<S, min_plus> || std::same_as<S, max_plus>;
    if (cfg.witnesses) {
        if (M != sig_mode::strict)
            throw std::invalid_argument("witnesses are defined for the strict signature only");
        if (!tropical)
            throw std::invalid_argument("witnesses need min-plus or max-plus, not '" + ops.id() +
                                        "'");
    }

    std::vector<word> words;
    if (cfg.word_texts.empty()) {
        words = generate_words(corpus.dimension, cfg.max_length, cfg.max_weight);
    } else {
        for (const std::string& text : cfg.word_texts) words.push_back(parse_cli_word(text));
        std::sort(words.begin(), words.end(), feature_less);
        words.erase(std::unique(words.begin(), words.end()), words.end());
    }
    for (const word& w : words) {
        if (M == sig_mode::strict && !w.standard())
            throw std::invalid_argument("strict mode needs standard words; got " + print_word(w));
        if constexpr (!mul_invertible_semiring<S>) {
            if (!w.standard())
                throw std::invalid_argument("Laurent words need min-plus or max-plus; got " +
                                            print_word(w) + " over '" + ops.id() + "'");
        }
    }

    struct outcome {
        std::size_t s = 0, t = 0;
        std::vector<value_t<S>> values;
        std::vector<std::optional<std::vector<std::size_t>>> witnesses;
    };
    std::vector<outcome> results(corpus.series.size());
    std::vector<std::exception_ptr> errors(corpus.series.size());

    auto compute_one = [&](std::size_t si) {
        const series_data& sd = corpus.series[si];
        const time_series<S> z = job_series(ops, corpus.dimension, sd.rows, cfg.preprocess);
        outcome& r = results[si];
        r.s = cfg.window ? cfg.window->first : 0;
        r.t = cfg.window ? cfg.window->second : z.length();
        if (r.s > r.t || r.t > z.length())
            throw std::invalid_argument("series '" + sd.id + "': window (" + std::to_string(r.s) +
                                        ", " + std::to_string(r.t) + "] not inside (0, " +
                                        std::to_string(z.length()) + "]");
        r.values.reserve(words.size());
        for (const word& w : words) {
            if constexpr (M == sig_mode::nonstrict)
                r.values.push_back(iss_nonstrict(z, w, r.s, r.t));
            else
                r.values.push_back(iss(z, w, r.s, r.t));
        }
        if (cfg.witnesses) {
            if constexpr (tropical && M == sig_mode::strict) {
                if (r.t - r.s > cfg.witness_cap)
                    throw std::invalid_argument(
                        "series '" + sd.id + "': witness window exceeds the cap of " +
                        std::to_string(cfg.witness_cap));
                for (const word& w : words)
                    r.witnesses.push_back(emit_witnesses(z, w, r.s, r.t));
            }
        }
    };

    const std::size_t n = corpus.series.size();
    const std::size_t workers =
        std::min<std::size_t>(n, std::max<unsigned>(1, std::thread::hardware_concurrency()));
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) compute_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto run = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) {
                try {
                    compute_one(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        for (std::size_t wi = 0; wi < workers; ++wi) pool.emplace_back(run);
        for (auto& th : pool) th.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    if (cfg.format == job_config::output_format::json) {
        nlohmann::json doc;
        doc["semiring"] = ops.id();
        doc["mode"] = M == sig_mode::strict ? "strict" : "nonstrict";
        nlohmann::json names = nlohmann::json::array();
        for (const word& w : words) names.push_back(display_word(w));
        doc["words"] = std::move(names);
        nlohmann::json series = nlohmann::json::array();
        for (std::size_t si = 0; si < n; ++si) {
            nlohmann::json row;
            row["id"] = corpus.series[si].id;
            row["window"] = {results[si].s, results[si].t};
            nlohmann::json features;
            for (std::size_t wi = 0; wi < words.size(); ++wi)
                features[display_word(words[wi])] = value_to_json(results[si].values[wi]);
            row["features"] = std::move(features);
            if (cfg.witnesses) {
                nlohmann::json wit;
                for (std::size_t wi = 0; wi < words.size(); ++wi) {
                    const auto& opt = results[si].witnesses[wi];
                    wit[display_word(words[wi])] =
                        opt ? nlohmann::json(*opt) : nlohmann::json(nullptr);
                }
                row["witnesses"] = std::move(wit);
            }
            series.push_back(std::move(row));
        }
        doc["series"] = std::move(series);
        return doc.dump(2) + "\n";
    }

    std::string out = "id";
    for (const word& w : words) out += "," + display_word(w);
    if (cfg.witnesses)
        for (const word& w : words) out += ",witness:" + display_word(w);
    out += "\n";
    for (std::size_t si = 0; si < n; ++si) {
        out += corpus.series[si].id;
        for (const auto& v : results[si].values) out += "," + ops.to_text(v);
        if (cfg.witnesses)
            for (const auto& opt : results[si].witnesses) out += "," + format_witness(opt);
        out += "\n";
    }
    return out;
}

}  // namespace detail

/// Runs one feature-extraction job and returns the complete output text.
inline std::string run_job(const csv_corpus& corpus, const job_config& cfg) {
    if (corpus.dimension == 0 || corpus.series.empty())
        throw std::invalid_argument("run_job: empty corpus");
    return dispatch_semiring(cfg.semiring_id, [&](auto ops) -> std::string {
        using S = decltype(ops);
        if (cfg.mode == sig_mode::nonstrict) {
            if constexpr (!S::is_idempotent) {
                throw std::invalid_argument("non-strict mode needs an idempotent semiring; '" +
                                            ops.id() + "' is not idempotent");
            } else {
                return detail::run_job_typed<S, sig_mode::nonstrict>(ops, corpus, cfg);
            }
        }
        return detail::run_job_typed<S, sig_mode::strict>(ops, corpus, cfg);
    });
}

/// Deterministic demo corpus: `count` series of `length` rows, values on
/// the grid {-4.00, -3.75, ..., 4.00}. Long CSV format.
inline csv_corpus generate_corpus(std::size_t count, std::size_t length, std::size_t dimension,
                                  std::uint64_t seed) {
    if (count == 0 || length == 0 || dimension == 0)
        throw std::invalid_argument("generate_corpus: count, length and dimension must be >= 1");
    std::mt19937_64 rng(seed);
    csv_corpus corpus;
    corpus.dimension = dimension;
    for (std::size_t si = 0; si < count; ++si) {
        series_data sd;
        sd.id = "s" + std::to_string(si + 1);
        for (std::size_t t = 0; t < length; ++t) {
            std::vector<double> row(dimension);
            for (std::size_t i = 0; i < dimension; ++i)
                row[i] = 0.25 * (static_cast<double>(rng() % 33) - 16.0);
            sd.rows.push_back(std::move(row));
        }
        corpus.series.push_back(std::move(sd));
    }
    return corpus;
}

inline std::string corpus_to_csv(const csv_corpus& corpus) {
    std::string out = "id";
    for (std::size_t i = 1; i <= corpus.dimension; ++i) out += ",x" + std::to_string(i);
    out += "\n";
    for (const series_data& sd : corpus.series)
        for (const auto& row : sd.rows) {
            out += sd.id;
            for (double v : row) out += "," + detail::format_double(v);
            out += "\n";
        }
    return out;
}

}  // namespace semisig
