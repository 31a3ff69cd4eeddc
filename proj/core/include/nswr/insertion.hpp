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

#ifndef NSWR_INSERTION_HPP
#define NSWR_INSERTION_HPP

#include <string>
#include <vector>

#include "nswr/nswr_params.hpp"
#include "nswr/oracle.hpp"
#include "nswr/query_table.hpp"
#include "nswr/ranking.hpp"
#include "nswr/window_dp.hpp"

namespace nswr {

/// Auditable anomalies of a pipeline run. Violations are counted, never
/// silently absorbed.
struct SortEvents {
    long long window_violations = 0;    // intermediate orders drifting past the window
    long long element_exhaustions = 0;  // walk majority tests that ran out of fresh elements

    /// "window_violations:N;element_exhaustions:M", stable for CSV embedding.
    std::string to_csv() const;
};

/// Coarse placement of x into `current` (items ordered low to high): the list
/// is cut into blocks of block_len (last block may be shorter), x is compared
/// once against every element of every block, and the returned position is
/// the end of the last block whose per-element majority reports x larger
/// (0 when none does). Block ties count as "x smaller". When the current
/// order is within block_len of the truth and noise behaves typically the
/// position lands within 3*block_len of x's true position.
int insert_coarse(const std::vector<int>& current, int x, ComparisonSource& source,
                  int block_len);

struct InsertionResult {
    Ranking ranking;
    Score score;
    SortEvents events;
    WindowDpStats dp_stats;  // aggregated over every re-sort of the run
};

/// Insertion sorter: items are inserted in a seeded random order; each step
/// places the new item with insert_coarse, then re-optimizes with the
/// windowed DP (the full working list, or only a window*4-radius slice
/// around the insertion point when params.localized). The final score is
/// measured against the source over all pairs.
///
/// With `truth` given, every step's working order is checked against the
/// truth restricted to the inserted items, and steps whose max dislocation
/// exceeds params.window are counted as window_violations.
InsertionResult noisy_sort_insertion(ComparisonSource& source, const NswrParams& params,
                                     const Ranking* truth = nullptr);
InsertionResult noisy_sort_insertion(const QueryTable& q, const NswrParams& params,
                                     const Ranking* truth = nullptr);

}  // namespace nswr

#endif  // NSWR_INSERTION_HPP
