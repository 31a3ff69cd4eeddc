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

#ifndef NSWR_ORACLE_HPP
#define NSWR_ORACLE_HPP

#include <atomic>
#include <cstdint>
#include <memory>
#include <vector>

#include "nswr/query_table.hpp"
#include "nswr/ranking.hpp"

namespace nswr {

/// Noise model for one-shot comparisons: a pair ordered one way by the truth
/// reports that way with probability p = 1/2 + gamma. gamma = 1/2 is the
/// noiseless degenerate case.
struct NoiseParams {
    double gamma = 0.25;  // in (0, 1/2]
    std::uint64_t seed = 0;

    double p() const { return 0.5 + gamma; }
    void validate() const;  // throws std::invalid_argument
};

/// Anything that can answer ordered pairwise comparisons over n items.
/// compare(i, j) returns +1 if the source claims item i larger than item j,
/// -1 otherwise, and is antisymmetric in its arguments.
struct ComparisonSource {
    virtual ~ComparisonSource() = default;
    virtual int items() const = 0;
    virtual int compare(int i, int j) = 0;
};

/// Comparison view over a fully materialised table.
class TableSource final : public ComparisonSource {
public:
    explicit TableSource(const QueryTable& q) : q_(&q) {}
    int items() const override { return q_->items(); }
    int compare(int i, int j) override { return q_->query(i, j); }

private:
    const QueryTable* q_;
};

/// Comparison view over a subset of another source's items, relabelled
/// 0..m-1 in the order given. The base source must outlive the view.
class SubsetSource final : public ComparisonSource {
public:
    SubsetSource(ComparisonSource& base, std::vector<int> subset)
        : base_(&base), subset_(std::move(subset)) {}
    int items() const override { return static_cast<int>(subset_.size()); }
    int compare(int a, int b) override { return base_->compare(subset_[a], subset_[b]); }

private:
    ComparisonSource* base_;
    std::vector<int> subset_;
};

/// Outcome of the one-shot comparison of pair {i, j} under the given truth
/// and noise. Pure function of (params.seed, min(i,j), max(i,j)); in
/// particular it does not depend on the order the two items are named or on
/// when the pair is asked relative to other pairs.
int noisy_pair_outcome(const NoiseParams& params, const Ranking& truth, int i, int j);

/// Score of sigma against the source, asking every pair once. On a lazily
/// materialised source this extends its table on demand.
Score score(ComparisonSource& source, const Ranking& sigma);

/// Full tournament drawn from the noise model: every pair flipped away from
/// the truth independently with probability 1/2 - gamma.
QueryTable make_noisy_tournament(const Ranking& truth, const NoiseParams& params);

/// Lazily materialised tournament with query accounting. The first ask of a
/// pair fixes its outcome forever (no resampling); repeat asks, in either
/// orientation, return the recorded value. distinct_queries counts pairs
/// materialised, total_accesses counts every ask. Materialisation of a pair
/// is atomic, so concurrent asks of the same pair agree and the counters are
/// exact once all asks have completed.
class CountingOracle final : public ComparisonSource {
public:
    /// Generative oracle: outcomes drawn from the noise model around truth.
    CountingOracle(Ranking truth, NoiseParams params);

    /// Replay oracle: outcomes come from a fixed table (e.g. a tournament
    /// loaded from disk); the counters still track what was asked.
    explicit CountingOracle(QueryTable fixed);

    int items() const override { return n_; }
    int compare(int i, int j) override { return query(i, j); }
    int query(int i, int j);

    long long distinct_queries() const { return distinct_.load(std::memory_order_relaxed); }
    long long total_accesses() const { return total_.load(std::memory_order_relaxed); }

    struct Snapshot {
        long long distinct_queries = 0;
        long long total_accesses = 0;
    };
    Snapshot snapshot() const { return {distinct_queries(), total_accesses()}; }

    /// Asks every not-yet-materialised pair and returns the complete table.
    /// Counts toward the counters like any other asks.
    QueryTable materialize_all();

    const Ranking& truth() const;  // throws std::logic_error on replay oracles

private:
    int outcome_for(int hi, int lo) const;

    int n_ = 0;
    bool generative_ = false;
    Ranking truth_;
    NoiseParams params_;
    QueryTable fixed_;
    std::unique_ptr<std::atomic<std::int8_t>[]> cell_;  // 0 = unmaterialised
    std::atomic<long long> distinct_{0};
    std::atomic<long long> total_{0};
};

}  // namespace nswr

#endif  // NSWR_ORACLE_HPP
