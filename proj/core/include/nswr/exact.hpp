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

#ifndef NSWR_EXACT_HPP
#define NSWR_EXACT_HPP

#include "nswr/query_table.hpp"
#include "nswr/ranking.hpp"

namespace nswr {

struct OptimalResult {
    Ranking ranking;
    Score score;
};

/// Maximum-score ranking by enumerating all n! rank assignments. Among
/// equal-score optima returns the lexicographically smallest rank sequence.
/// Guarded to n <= 10 (throws std::invalid_argument beyond).
OptimalResult optimal_ranking_exhaustive(const QueryTable& q);

/// Maximum-score ranking by dynamic programming over subsets: the best
/// ranking of S extends the best ranking of S minus its top element, so each
/// of the 2^n subsets is charged once. Ties on the appended element go to the
/// smaller item index, which makes the result deterministic but not
/// necessarily the lexicographically smallest optimum. Guarded to n <= 20.
OptimalResult optimal_ranking_subset_dp(const QueryTable& q);

}  // namespace nswr

#endif  // NSWR_EXACT_HPP
