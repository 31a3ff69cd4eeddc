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

// Command line surface. Exit codes: 0 success, 1 runtime or solver-guard
// failure (bad files, guard throws), 2 usage errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nswr/exact.hpp"
#include "nswr/experiment.hpp"
#include "nswr/insertion.hpp"
#include "nswr/nswr_params.hpp"
#include "nswr/oracle.hpp"
#include "nswr/ranking.hpp"
#include "nswr/rng.hpp"
#include "nswr/theory.hpp"
#include "nswr/tournament_io.hpp"
#include "nswr/walk_tree.hpp"
#include "nswr/window_dp.hpp"

namespace {

using nlohmann::json;

json params_json(const nswr::NswrParams& p) {
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

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
    if (!out.good()) throw std::runtime_error("write failed: " + path);
}

struct GenerateArgs {
    int n = 0;
    double gamma = 0.25;
    std::uint64_t seed = 0;
    std::string output;
};

int run_generate(const GenerateArgs& a) {
    nswr::SplitMix64 rng(nswr::hash_combine(a.seed, 1));
    const nswr::Ranking truth = nswr::random_ranking(a.n, rng);
    const nswr::QueryTable table =
        nswr::make_noisy_tournament(truth, {a.gamma, nswr::hash_combine(a.seed, 2)});
    std::ostringstream out;
    nswr::write_tournament_csv(out, table);
    write_text(a.output, out.str());
    return 0;
}

struct SolveArgs {
    std::string input;
    int n = 0;  // 0 means "no generated instance"
    double gamma = 0.25;
    std::uint64_t seed = 0;
    std::string algorithm = "subset-dp";
    std::optional<int> window, block_len, majority_k, walk_steps;
    std::optional<double> beta;
    std::string output;
};

int run_solve(const SolveArgs& a) {
    std::optional<nswr::QueryTable> loaded_table;
    std::vector<std::string> names;
    if (!a.input.empty()) {
        nswr::NamedTournament loaded = nswr::load_tournament_csv_file(a.input);
        loaded_table.emplace(std::move(loaded.table));
        names = std::move(loaded.items);
    } else {
        nswr::SplitMix64 rng(nswr::hash_combine(a.seed, 1));
        const nswr::Ranking truth = nswr::random_ranking(a.n, rng);
        loaded_table.emplace(
            nswr::make_noisy_tournament(truth, {a.gamma, nswr::hash_combine(a.seed, 2)}));
        names.reserve(a.n);
        for (int i = 0; i < a.n; ++i) names.push_back("item_" + std::to_string(i + 1));
    }
    const nswr::QueryTable& table = *loaded_table;
    const int n = table.items();

    nswr::NswrParams params = nswr::NswrParams::defaults_for(n, a.gamma, a.seed);
    if (a.window) params.window = *a.window;
    if (a.block_len) params.block_len = *a.block_len;
    if (a.majority_k) params.majority_k = *a.majority_k;
    if (a.walk_steps) params.walk_steps = *a.walk_steps;
    if (a.beta) params.beta = *a.beta;
    params.validate();

    const nswr::Algorithm algo = nswr::algorithm_from_name(a.algorithm);
    nswr::Ranking ranking = nswr::Ranking::identity(n);
    nswr::Score score_value = 0;
    json extra = json::object();

    switch (algo) {
        case nswr::Algorithm::kExhaustive: {
            const nswr::OptimalResult r = nswr::optimal_ranking_exhaustive(table);
            ranking = r.ranking;
            score_value = r.score;
            break;
        }
        case nswr::Algorithm::kSubsetDp: {
            const nswr::OptimalResult r = nswr::optimal_ranking_subset_dp(table);
            ranking = r.ranking;
            score_value = r.score;
            break;
        }
        case nswr::Algorithm::kWindowDp: {
            const nswr::PresortedResult r =
                nswr::sort_presorted(table, nswr::Ranking::identity(n), params.window);
            ranking = r.ranking;
            score_value = r.score;
            break;
        }
        case nswr::Algorithm::kInsertion: {
            nswr::TableSource src(table);
            nswr::InsertionResult r = nswr::noisy_sort_insertion(src, params);
            ranking = std::move(r.ranking);
            score_value = r.score;
            extra["events"] = r.events.to_csv();
            break;
        }
        case nswr::Algorithm::kQueryEfficient: {
            nswr::CountingOracle oracle(table);
            nswr::QueryEfficientResult r = nswr::noisy_sort_query_efficient(oracle, params);
            ranking = std::move(r.ranking);
            score_value = r.score;
            extra["events"] = r.events.to_csv();
            extra["distinct_queries"] = r.query_stats.distinct_queries;
            extra["total_accesses"] = r.query_stats.total_accesses;
            break;
        }
    }

    json out = {
        {"algorithm", a.algorithm},
        {"n", n},
        {"score", score_value},
        {"max_score", nswr::max_score(n)},
        {"params", params_json(params)},
    };
    json order = json::array();  // largest item first
    for (int r = n - 1; r >= 0; --r) order.push_back(names[ranking.item_at(r)]);
    out["ranking"] = std::move(order);
    for (auto& [key, value] : extra.items()) out[key] = std::move(value);

    write_text(a.output, out.dump(2) + "\n");
    return 0;
}

struct ExperimentArgs {
    std::string config_path;
    std::string output;
    std::string format;
    std::optional<std::uint64_t> seed;
};

int run_experiment_cmd(const ExperimentArgs& a) {
    std::ifstream in(a.config_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file: " + a.config_path);
    std::ostringstream text;
    text << in.rdbuf();

    nswr::ExperimentConfig config = nswr::parse_experiment_config(text.str());
    if (!a.output.empty()) config.output = a.output;
    if (!a.format.empty()) config.format = a.format;
    if (a.seed) config.seed = *a.seed;
    config.validate();
    nswr::run_experiment(config);
    return 0;
}

struct ConstantsArgs {
    double gamma = 0.25;
    double beta = 1.0;
    int n = 1000;
};

int run_constants(const ConstantsArgs& a) {
    const nswr::TheoryConstants t = nswr::theory_constants(a.gamma, a.beta, a.n);
    const json out = {
        {"gamma", t.gamma},
        {"beta", t.beta},
        {"n", t.n},
        {"epsilon", t.epsilon},
        {"p1", t.p1},
        {"m1", t.m1},
        {"m2", t.m2},
        {"c2", t.c2},
        {"c3", t.c3},
        {"c4", t.c4},
        {"k_star", t.k_star},
        {"c_walk", t.c_walk},
        {"C", t.C},
    };
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"maximum-likelihood sorting from one-shot noisy pairwise comparisons"};
    app.require_subcommand(1);

    GenerateArgs gen;
    CLI::App* generate = app.add_subcommand(
        "generate", "Draw a noisy tournament over a seeded random truth and write it as CSV");
    generate->add_option("--n", gen.n, "Number of items")->required()->check(CLI::PositiveNumber);
    generate->add_option("--gamma", gen.gamma, "Per-comparison advantage, in (0, 1/2]");
    generate->add_option("--seed", gen.seed, "Stream seed for truth and noise");
    generate->add_option("--output", gen.output, "Output path, - for stdout");

    SolveArgs sol;
    CLI::App* solve = app.add_subcommand(
        "solve", "Rank a tournament file (or a generated instance) and print the result as JSON");
    solve->add_option("--input", sol.input, "Tournament CSV to rank");
    solve->add_option("--n", sol.n, "Generate an instance of this size instead of reading a file")
        ->check(CLI::PositiveNumber);
    solve->add_option("--gamma", sol.gamma,
                      "Advantage used for generation and parameter calibration");
    solve->add_option("--seed", sol.seed, "Stream seed");
    solve->add_option("--algorithm", sol.algorithm,
                      "exhaustive, subset-dp, window-dp, insertion, or query-efficient");
    int window = 0, block_len = 0, majority_k = 0, walk_steps = 0;
    double beta = 0.0;
    solve->add_option("--window", window, "Re-sort window override");
    solve->add_option("--block-len", block_len, "Coarse insertion block length override");
    solve->add_option("--majority-k", majority_k, "Tree-walk majority size override");
    solve->add_option("--walk-steps", walk_steps, "Tree-walk length override");
    solve->add_option("--beta", beta, "Failure exponent override");
    solve->add_option("--output", sol.output, "Output path, - for stdout");

    ExperimentArgs exp;
    CLI::App* experiment =
        app.add_subcommand("experiment", "Run a sweep described by a JSON config");
    experiment->add_option("--config", exp.config_path, "Experiment config JSON")->required();
    experiment->add_option("--output", exp.output, "Override the config's output path");
    experiment->add_option("--format", exp.format, "Override the config's format (csv or json)");
    std::uint64_t exp_seed = 0;
    experiment->add_option("--seed", exp_seed, "Override the config's seed");

    ConstantsArgs con;
    CLI::App* constants = app.add_subcommand(
        "constants", "Evaluate the worst-case analysis constants for (gamma, beta, n)");
    constants->add_option("--gamma", con.gamma, "Per-comparison advantage, in (0, 1/2]");
    constants->add_option("--beta", con.beta, "Failure exponent");
    constants->add_option("--n", con.n, "Number of items")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*generate) return run_generate(gen);
        if (*solve) {
            if (!sol.input.empty() && sol.n > 0) {
                std::cerr << "solve: --input and --n are mutually exclusive\n";
                return 2;
            }
            if (sol.input.empty() && sol.n == 0) {
                std::cerr << "solve: one of --input or --n is required\n";
                return 2;
            }
            if (solve->count("--window")) sol.window = window;
            if (solve->count("--block-len")) sol.block_len = block_len;
            if (solve->count("--majority-k")) sol.majority_k = majority_k;
            if (solve->count("--walk-steps")) sol.walk_steps = walk_steps;
            if (solve->count("--beta")) sol.beta = beta;
            return run_solve(sol);
        }
        if (*experiment) {
            if (experiment->count("--seed")) exp.seed = exp_seed;
            return run_experiment_cmd(exp);
        }
        if (*constants) return run_constants(con);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int main(int argc, char** argv) { return cli_main(argc, argv); }
