// Copyright 2026 The nswr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nswr/experiment.hpp"

#include <charconv>
#include <chrono>
#include <climits>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include "json.hpp"

#include "nswr/exact.hpp"
#include "nswr/insertion.hpp"
#include "nswr/oracle.hpp"
#include "nswr/rng.hpp"
#include "nswr/theory.hpp"
#include "nswr/walk_tree.hpp"
#include "nswr/window_dp.hpp"

namespace nswr {
namespace {

// Shortest round-trip decimal form, so CSV output is byte-stable and parses
// back to the identical double.
std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

long long parse_ll(const std::string& field) {
    long long v = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last)
        throw std::invalid_argument("csv row: bad integer field '" + field + "'");
    return v;
}

int parse_int(const std::string& field) {
    const long long v = parse_ll(field);
    if (v < INT_MIN || v > INT_MAX)
        throw std::invalid_argument("csv row: integer field out of range '" + field + "'");
    return static_cast<int>(v);
}

double parse_double(const std::string& field) {
    double v = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last)
        throw std::invalid_argument("csv row: bad number field '" + field + "'");
    return v;
}

std::uint64_t gamma_bits(double gamma) {
    std::uint64_t bits = 0;
    static_assert(sizeof bits == sizeof gamma);
    std::memcpy(&bits, &gamma, sizeof bits);
    return bits;
}

// One RNG stream root per (seed, n, gamma, trial) cell; truth, noise, and
// chain seeds branch off it so a row never depends on the rest of the sweep.
std::uint64_t trial_stream_seed(std::uint64_t base, int n, double gamma, int trial) {
    std::uint64_t s = hash_combine(base, static_cast<std::uint64_t>(n));
    s = hash_combine(s, gamma_bits(gamma));
    return hash_combine(s, static_cast<std::uint64_t>(trial));
}

nlohmann::json params_json(const NswrParams& p) {
    return {
        {"gamma", p.gamma},
        {"window", p.window},
        {"block_len", p.block_len},
        {"majority_k", p.majority_k},
        {"walk_steps", p.walk_steps},
        {"interval_len_min", p.interval_len_min},
        {"interval_len_max", p.interval_len_max},
        {"trim", p.trim},
        {"beta", p.beta},
        {"seed", p.seed},
        {"localized", p.localized},
    };
}

nlohmann::json row_json(const ResultRow& row) {
    return {
        {"n", row.n},
        {"gamma", row.gamma},
        {"trial", row.trial},
        {"algorithm", algorithm_name(row.algorithm)},
        {"score_out", row.metrics.score_out},
        {"score_truth", row.metrics.score_truth},
        {"sum_disloc", row.metrics.sum_dislocation},
        {"max_disloc", row.metrics.max_dislocation},
        {"distinct_queries", row.metrics.distinct_queries},
        {"total_accesses", row.metrics.total_accesses},
        {"wall_time_ms", row.metrics.wall_time_ms},
        {"events", row.events},
        {"params", params_json(row.params)},
    };
}

int config_int(const nlohmann::json& v, const char* key) {
    if (!v.is_number_integer())
        throw std::invalid_argument(std::string("config: '") + key + "' must be an integer");
    return v.get<int>();
}

std::vector<int> config_int_list(const nlohmann::json& v, const char* key) {
    std::vector<int> out;
    if (v.is_number_integer()) {
        out.push_back(v.get<int>());
        return out;
    }
    if (!v.is_array())
        throw std::invalid_argument(std::string("config: '") + key +
                                    "' must be an integer or an array of integers");
    for (const auto& e : v) out.push_back(config_int(e, key));
    return out;
}

double config_number(const nlohmann::json& v, const char* key) {
    if (!v.is_number())
        throw std::invalid_argument(std::string("config: '") + key + "' must be a number");
    return v.get<double>();
}

std::vector<double> config_number_list(const nlohmann::json& v, const char* key) {
    std::vector<double> out;
    if (v.is_number()) {
        out.push_back(v.get<double>());
        return out;
    }
    if (!v.is_array())
        throw std::invalid_argument(std::string("config: '") + key +
                                    "' must be a number or an array of numbers");
    for (const auto& e : v) out.push_back(config_number(e, key));
    return out;
}

void parse_overrides(const nlohmann::json& v, ParamOverrides& o) {
    if (!v.is_object())
        throw std::invalid_argument("config: 'params' must be an object");
    for (const auto& [key, value] : v.items()) {
        if (key == "window")
            o.window = config_int(value, "params.window");
        else if (key == "block_len")
            o.block_len = config_int(value, "params.block_len");
        else if (key == "majority_k")
            o.majority_k = config_int(value, "params.majority_k");
        else if (key == "walk_steps")
            o.walk_steps = config_int(value, "params.walk_steps");
        else if (key == "interval_len_min")
            o.interval_len_min = config_int(value, "params.interval_len_min");
        else if (key == "interval_len_max")
            o.interval_len_max = config_int(value, "params.interval_len_max");
        else if (key == "trim")
            o.trim = config_int(value, "params.trim");
        else if (key == "beta")
            o.beta = config_number(value, "params.beta");
        else if (key == "localized") {
            if (!value.is_boolean())
                throw std::invalid_argument("config: 'params.localized' must be a boolean");
            o.localized = value.get<bool>();
        } else if (key == "gamma" || key == "seed") {
            throw std::invalid_argument("config: 'params." + key +
                                        "' is set by the sweep, not overridable");
        } else {
            throw std::invalid_argument("config: params: unknown key '" + key + "'");
        }
    }
}

}  // namespace

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::kExhaustive: return "exhaustive";
        case Algorithm::kSubsetDp: return "subset-dp";
        case Algorithm::kWindowDp: return "window-dp";
        case Algorithm::kInsertion: return "insertion";
        case Algorithm::kQueryEfficient: return "query-efficient";
    }
    throw std::invalid_argument("algorithm_name: unknown enumerator");
}

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "exhaustive") return Algorithm::kExhaustive;
    if (name == "subset-dp") return Algorithm::kSubsetDp;
    if (name == "window-dp") return Algorithm::kWindowDp;
    if (name == "insertion") return Algorithm::kInsertion;
    if (name == "query-efficient") return Algorithm::kQueryEfficient;
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

void ParamOverrides::apply(NswrParams& params) const {
    if (window) params.window = *window;
    if (block_len) params.block_len = *block_len;
    if (majority_k) params.majority_k = *majority_k;
    if (walk_steps) params.walk_steps = *walk_steps;
    if (interval_len_min) params.interval_len_min = *interval_len_min;
    if (interval_len_max) params.interval_len_max = *interval_len_max;
    if (trim) params.trim = *trim;
    if (beta) params.beta = *beta;
    if (localized) params.localized = *localized;
}

void ExperimentConfig::validate() const {
    if (trials < 0) throw std::invalid_argument("config: 'trials' must be nonnegative");
    if (n.empty()) throw std::invalid_argument("config: 'n' must list at least one size");
    for (const int v : n)
        if (v < 1) throw std::invalid_argument("config: 'n' values must be positive");
    for (const double g : gamma)
        if (!(g > 0.0) || g > 0.5)
            throw std::invalid_argument("config: 'gamma' values must be in (0, 1/2]");
    if (format != "csv" && format != "json")
        throw std::invalid_argument("config: 'format' must be \"csv\" or \"json\"");
}

ExperimentConfig parse_experiment_config(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("config: not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw std::invalid_argument("config: top level must be a JSON object");

    ExperimentConfig cfg;
    bool saw_n = false, saw_gamma = false, saw_trials = false, saw_algorithm = false;
    for (const auto& [key, value] : j.items()) {
        if (key == "n") {
            cfg.n = config_int_list(value, "n");
            saw_n = true;
        } else if (key == "gamma") {
            cfg.gamma = config_number_list(value, "gamma");
            saw_gamma = true;
        } else if (key == "trials") {
            cfg.trials = config_int(value, "trials");
            saw_trials = true;
        } else if (key == "algorithm") {
            if (!value.is_string())
                throw std::invalid_argument("config: 'algorithm' must be a string");
            cfg.algorithm = algorithm_from_name(value.get<std::string>());
            saw_algorithm = true;
        } else if (key == "seed") {
            if (value.is_number_unsigned())
                cfg.seed = value.get<std::uint64_t>();
            else if (value.is_number_integer() && value.get<long long>() >= 0)
                cfg.seed = static_cast<std::uint64_t>(value.get<long long>());
            else
                throw std::invalid_argument("config: 'seed' must be a nonnegative integer");
        } else if (key == "params") {
            parse_overrides(value, cfg.overrides);
        } else if (key == "output") {
            if (!value.is_string())
                throw std::invalid_argument("config: 'output' must be a string");
            cfg.output = value.get<std::string>();
        } else if (key == "format") {
            if (!value.is_string())
                throw std::invalid_argument("config: 'format' must be a string");
            cfg.format = value.get<std::string>();
        } else if (key == "measure_time") {
            if (!value.is_boolean())
                throw std::invalid_argument("config: 'measure_time' must be a boolean");
            cfg.measure_time = value.get<bool>();
        } else {
            throw std::invalid_argument("config: unknown key '" + key + "'");
        }
    }
    if (!saw_n) throw std::invalid_argument("config: missing key 'n'");
    if (!saw_gamma) throw std::invalid_argument("config: missing key 'gamma'");
    if (!saw_trials) throw std::invalid_argument("config: missing key 'trials'");
    if (!saw_algorithm) throw std::invalid_argument("config: missing key 'algorithm'");
    cfg.validate();
    return cfg;
}

ResultRow run_trial(const ExperimentConfig& config, int n, double gamma, int trial) {
    if (n < 1) throw std::invalid_argument("run_trial: n must be positive");
    const std::uint64_t stream = trial_stream_seed(config.seed, n, gamma, trial);
    SplitMix64 truth_rng(hash_combine(stream, 1));
    const Ranking truth = random_ranking(n, truth_rng);
    const NoiseParams noise{gamma, hash_combine(stream, 2)};

    NswrParams params = NswrParams::defaults_for(n, gamma, hash_combine(stream, 3));
    config.overrides.apply(params);
    params.validate();

    ResultRow row;
    row.n = n;
    row.gamma = gamma;
    row.trial = trial;
    row.algorithm = config.algorithm;
    row.params = params;

    using Clock = std::chrono::steady_clock;
    Clock::time_point t0, t1;
    const bool timing = config.measure_time;

    std::optional<Ranking> out;
    std::optional<QueryTable> table;
    CountingOracle::Snapshot counters;
    std::string events;

    switch (config.algorithm) {
        case Algorithm::kExhaustive: {
            table.emplace(make_noisy_tournament(truth, noise));
            if (timing) t0 = Clock::now();
            out = optimal_ranking_exhaustive(*table).ranking;
            if (timing) t1 = Clock::now();
            counters = {table->pair_count(), table->pair_count()};
            break;
        }
        case Algorithm::kSubsetDp: {
            table.emplace(make_noisy_tournament(truth, noise));
            if (timing) t0 = Clock::now();
            out = optimal_ranking_subset_dp(*table).ranking;
            if (timing) t1 = Clock::now();
            counters = {table->pair_count(), table->pair_count()};
            break;
        }
        case Algorithm::kWindowDp: {
            table.emplace(make_noisy_tournament(truth, noise));
            if (timing) t0 = Clock::now();
            out = sort_presorted(*table, Ranking::identity(n), params.window).ranking;
            if (timing) t1 = Clock::now();
            counters = {table->pair_count(), table->pair_count()};
            break;
        }
        case Algorithm::kInsertion: {
            CountingOracle oracle(truth, noise);
            if (timing) t0 = Clock::now();
            InsertionResult res = noisy_sort_insertion(oracle, params, &truth);
            if (timing) t1 = Clock::now();
            counters = oracle.snapshot();
            events = res.events.to_csv();
            out = std::move(res.ranking);
            table.emplace(oracle.materialize_all());
            break;
        }
        case Algorithm::kQueryEfficient: {
            CountingOracle oracle(truth, noise);
            if (timing) t0 = Clock::now();
            QueryEfficientResult res = noisy_sort_query_efficient(oracle, params, &truth);
            if (timing) t1 = Clock::now();
            counters = res.query_stats;
            events = res.events.to_csv();
            out = std::move(res.ranking);
            table.emplace(oracle.materialize_all());
            break;
        }
    }

    row.metrics = evaluate(*out, truth, *table, counters);
    if (timing)
        row.metrics.wall_time_ms =
            std::chrono::duration<double, std::milli>(t1 - t0).count();
    row.events = std::move(events);
    return row;
}

void run_experiment(const ExperimentConfig& config,
                    const std::function<void(const ResultRow&)>& sink) {
    config.validate();
    for (const int n : config.n)
        for (const double g : config.gamma)
            for (int trial = 0; trial < config.trials; ++trial)
                sink(run_trial(config, n, g, trial));
}

void run_experiment(const ExperimentConfig& config, std::ostream& out) {
    config.validate();
    if (config.format == "csv") {
        out << csv_header() << '\n';
        run_experiment(config,
                       [&out](const ResultRow& row) { out << csv_row(row) << '\n'; });
    } else {
        nlohmann::json rows = nlohmann::json::array();
        run_experiment(config,
                       [&rows](const ResultRow& row) { rows.push_back(row_json(row)); });
        out << rows.dump(2) << '\n';
    }
    out.flush();
}

void run_experiment(const ExperimentConfig& config) {
    config.validate();
    if (config.output.empty() || config.output == "-") {
        run_experiment(config, std::cout);
        return;
    }
    std::ofstream file(config.output, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + config.output);
    run_experiment(config, file);
    if (!file.good()) throw std::runtime_error("write failed: " + config.output);
}

std::string csv_header() {
    return "n,gamma,trial,algorithm,score_out,score_truth,sum_disloc,max_disloc,"
           "distinct_queries,total_accesses,wall_time_ms,events";
}

std::string csv_row(const ResultRow& row) {
    std::string line;
    line += std::to_string(row.n);
    line += ',';
    line += format_double(row.gamma);
    line += ',';
    line += std::to_string(row.trial);
    line += ',';
    line += algorithm_name(row.algorithm);
    line += ',';
    line += std::to_string(row.metrics.score_out);
    line += ',';
    line += std::to_string(row.metrics.score_truth);
    line += ',';
    line += std::to_string(row.metrics.sum_dislocation);
    line += ',';
    line += std::to_string(row.metrics.max_dislocation);
    line += ',';
    line += std::to_string(row.metrics.distinct_queries);
    line += ',';
    line += std::to_string(row.metrics.total_accesses);
    line += ',';
    line += format_double(row.metrics.wall_time_ms);
    line += ',';
    line += row.events;
    return line;
}

ResultRow parse_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    if (fields.size() != 12)
        throw std::invalid_argument("csv row: expected 12 fields, got " +
                                    std::to_string(fields.size()));
    ResultRow row;
    row.n = parse_int(fields[0]);
    row.gamma = parse_double(fields[1]);
    row.trial = parse_int(fields[2]);
    row.algorithm = algorithm_from_name(fields[3]);
    row.metrics.score_out = parse_ll(fields[4]);
    row.metrics.score_truth = parse_ll(fields[5]);
    row.metrics.sum_dislocation = parse_ll(fields[6]);
    row.metrics.max_dislocation = parse_int(fields[7]);
    row.metrics.distinct_queries = parse_ll(fields[8]);
    row.metrics.total_accesses = parse_ll(fields[9]);
    row.metrics.wall_time_ms = parse_double(fields[10]);
    row.events = fields[11];
    return row;
}

BeatCheck beat_probability_check(double gamma, int m, long long trials,
                                 std::uint64_t seed) {
    if (!(gamma > 0.0) || gamma > 0.5)
        throw std::invalid_argument("beat_probability_check: gamma must be in (0, 1/2]");
    if (m < 1) throw std::invalid_argument("beat_probability_check: m must be at least 1");
    if (trials < 1)
        throw std::invalid_argument("beat_probability_check: trials must be at least 1");

    BeatCheck out;
    out.exact_tail = static_cast<double>(binomial_lower_tail(m, 0.5 + gamma, m / 2));

    // The challenger beats the truth exactly when at most half of the m
    // differing one-shot comparisons come out the truth's way.
    SplitMix64 rng(seed);
    const double p = 0.5 + gamma;
    long long beats = 0;
    for (long long t = 0; t < trials; ++t) {
        int correct = 0;
        for (int i = 0; i < m; ++i)
            if (rng.next_double() < p) ++correct;
        if (2 * correct <= m) ++beats;
    }
    out.empirical_rate = static_cast<double>(beats) / static_cast<double>(trials);
    return out;
}

}  // namespace nswr
