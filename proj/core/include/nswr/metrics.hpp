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

#ifndef NSWR_METRICS_HPP
#define NSWR_METRICS_HPP

#include "nswr/oracle.hpp"
#include "nswr/query_table.hpp"
#include "nswr/ranking.hpp"

namespace nswr {

/// Per-trial quality and cost figures of one solver run.
struct Metrics {
    long long sum_dislocation = 0;  // sum over items of |sigma(i) - pi(i)|
    int max_dislocation = 0;        // max over items of |sigma(i) - pi(i)|
    Score score_out = 0;            // table score of the solver's output
    Score score_truth = 0;          // table score of the truth ranking
    long long distinct_queries = 0;
    long long total_accesses = 0;
    double wall_time_ms = 0.0;      // 0 when timing is disabled
};

/// Dislocation and score figures of output sigma against truth pi over the
/// query table q, with the query counters copied in. wall_time_ms is left 0;
/// timing belongs to the caller. max_dislocation <= sum_dislocation always.
/// Throws std::invalid_argument when sigma, pi, and q disagree on item count.
Metrics evaluate(const Ranking& sigma, const Ranking& pi, const QueryTable& q,
                 const CountingOracle::Snapshot& counters);

}  // namespace nswr

#endif  // NSWR_METRICS_HPP
