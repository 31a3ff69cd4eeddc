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

#ifndef NSWR_EXPERIMENT_HPP
#define NSWR_EXPERIMENT_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nswr/metrics.hpp"
#include "nswr/nswr_params.hpp"

namespace nswr {

enum class Algorithm {
    kExhaustive,      // n! enumeration, n <= 10
    kSubsetDp,        // subset DP, n <= 20
    kWindowDp,        // windowed repair of the identity order
    kInsertion,       // block insertion + windowed re-sorts
    kQueryEfficient,  // tree-walk insertion on a counting oracle
};

/// "exhaustive", "subset-dp", "window-dp", "insertion", "query-efficient".
std::string algorithm_name(Algorithm a);

/// Inverse of algorithm_name; throws std::invalid_argument on unknown names.
Algorithm algorithm_from_name(const std::string& name);

/// Per-field overrides applied on top of NswrParams::defaults_for. gamma and
/// seed are not overridable here: the sweep cell supplies gamma and the trial
/// stream supplies the seed.
struct ParamOverrides {
    std::optional<int> window;
    std::optional<int> block_len;
    std::optional<int> majority_k;
    std::optional<int> walk_steps;
    std::optional<int> interval_len_min;
    std::optional<int> interval_len_max;
    std::optional<int> trim;
    std::optional<double> beta;
    std::optional<bool> localized;

    void apply(NswrParams& params) const;
};

/// A sweep: the cross product of n values, gamma values, and trial indices,
/// one solver run each.
struct ExperimentConfig {
    std::vector<int> n;
    std::vector<double> gamma;
    int trials = 0;
    Algorithm algorithm = Algorithm::kInsertion;
    ParamOverrides overrides;
    std::uint64_t seed = 0;
    std::string output;          // file path; empty or "-" writes to stdout
    std::string format = "csv";  // "csv" or "json"
    bool measure_time = true;    // false pins wall_time_ms to 0 for byte-stable output

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

/// Parses the config JSON. Keys: n (int or array), gamma (number or array),
/// trials, algorithm, seed, params (object of NswrParams overrides), output,
/// format, measure_time. Unknown keys and wrong types throw
/// std::invalid_argument naming the key.
ExperimentConfig parse_experiment_config(const std::string& json_text);

/// One solver run's identity, resolved parameters, and measurements.
struct ResultRow {
    int n = 0;
    double gamma = 0.0;
    int trial = 0;
    Algorithm algorithm = Algorithm::kInsertion;
    Metrics metrics;
    std::string events;  // semicolon-joined name:count entries, may be empty
    NswrParams params;   // fully resolved for this trial
};

/// Runs one trial of the configured algorithm. The trial's RNG streams
/// (truth permutation, comparison noise, insertion chain) derive from
/// hash(config.seed, n, gamma, trial), so a row depends only on those four
/// values and the resolved parameters, never on the rest of the sweep.
/// Timing covers the solver call alone.
ResultRow run_trial(const ExperimentConfig& config, int n, double gamma, int trial);

/// Runs the full sweep in (n, gamma, trial) order, passing each row to sink.
void run_experiment(const ExperimentConfig& config,
                    const std::function<void(const ResultRow&)>& sink);

/// Runs the sweep and writes config.format to the stream: CSV rows as they
/// complete, or one pretty-printed JSON array (each element carrying the
/// resolved parameter set) at the end.
void run_experiment(const ExperimentConfig& config, std::ostream& out);

/// Runs the sweep and writes to config.output ("" or "-" for stdout).
/// Throws std::runtime_error when the file cannot be opened.
void run_experiment(const ExperimentConfig& config);

/// "n,gamma,trial,algorithm,score_out,score_truth,sum_disloc,max_disloc,..."
std::string csv_header();

/// One CSV line, no trailing newline. Doubles use shortest round-trip form.
std::string csv_row(const ResultRow& row);

/// Parses a csv_row line back; params is left at defaults (the CSV carries
/// only the schema columns). Throws std::invalid_argument on malformed rows.
ResultRow parse_csv_row(const std::string& line);

/// Empirical check of the pairwise-beat bound. A challenger differing from
/// the truth in exactly m oriented pairs beats it when at most half of those
/// m one-shot comparisons come out correct (ties included). Returns the
/// observed beat frequency over the given trials next to the exact tail
/// P[Bin(m, 1/2 + gamma) <= m/2]. Throws std::invalid_argument unless
/// m >= 1, trials >= 1, and gamma is in (0, 1/2].
struct BeatCheck {
    double empirical_rate = 0.0;
    double exact_tail = 0.0;
};
BeatCheck beat_probability_check(double gamma, int m, long long trials,
                                 std::uint64_t seed = 0);

}  // namespace nswr

#endif  // NSWR_EXPERIMENT_HPP
