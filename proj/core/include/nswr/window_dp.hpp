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

#ifndef NSWR_WINDOW_DP_HPP
#define NSWR_WINDOW_DP_HPP

#include "nswr/oracle.hpp"
#include "nswr/query_table.hpp"
#include "nswr/ranking.hpp"

namespace nswr {

/// Work accounting for one sort_presorted call.
struct WindowDpStats {
    int intervals = 0;                  // nodes in the recursion tree
    int max_candidate_sets = 0;         // largest entry table of any interval
    long long total_candidate_sets = 0;
    long long split_evaluations = 0;    // (candidate set, split) pairs scored
    long long cross_word_ops = 0;       // 64-bit words touched scoring splits
};

struct PresortedResult {
    Ranking ranking;
    Score score;
    WindowDpStats stats;
};

/// Best ranking among those that move no element more than `window` ranks
/// away from its rank in `initial`.
///
/// The search recursively halves the output rank range (upper half above
/// lower half, split at the ceiling). For an output interval I the occupying
/// set is sandwiched: it must contain every element whose initial rank is at
/// least `window` inside I and may only draw on elements within `window` of
/// I. Each interval therefore has at most 2^(4*window) candidate sets, keyed
/// by a bitmask over the at most 4*window undecided boundary elements, and
/// two half solutions merge by enumerating at most 2^(2*window) ways to
/// assign the boundary elements near the split.
///
/// Guarantees, in all cases deterministically:
///   - window = 0 returns `initial` unchanged;
///   - the returned score is score(q, result) and is >= score(q, initial);
///   - the search space is exactly every ranking within the per-element
///     window of `initial`, so if some globally optimal ranking lies in that
///     space the result is globally optimal.
///
/// Throws std::invalid_argument for negative windows and for combinations of
/// list length and window whose candidate enumeration cannot be afforded
/// (the practical wall is window above roughly 6 on long lists; short lists
/// admit any window, which subsumes them entirely).
PresortedResult sort_presorted(ComparisonSource& source, const Ranking& initial, int window);
PresortedResult sort_presorted(const QueryTable& q, const Ranking& initial, int window);

}  // namespace nswr

#endif  // NSWR_WINDOW_DP_HPP
