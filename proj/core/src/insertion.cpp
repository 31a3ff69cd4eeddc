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

#include "nswr/insertion.hpp"

#include <algorithm>
#include <stdexcept>

#include "pipeline_common.hpp"

namespace nswr {
namespace {

// Re-settles every element of the working order: each is pulled out,
// re-inserted at its maximum-agreement slot against the current list, and
// polished by the slice DP. An element's agreement at a slot is exactly its
// pair-score contribution there, so every move weakly improves the total
// score. Reads only pairs earlier insertions already paid for. Slot errors
// made while the list was a sparse sample of the final one turn into large
// rank errors as the gaps fill in, beyond the window DP's reach; sweeping at
// doublings keeps that legacy from freezing in.
void resettle_sweep(std::vector<int>& work, ComparisonSource& source, const NswrParams& params,
                    WindowDpStats& stats) {
    const std::vector<int> snapshot(work);
    for (const int x : snapshot) {
        const auto it = std::find(work.begin(), work.end(), x);
        const int from = static_cast<int>(it - work.begin());
        work.erase(it);
        const int to = detail::max_agreement_position(work, x, source, from);
        work.insert(work.begin() + to, x);
        const int passes = static_cast<int>(work.size()) / std::max(1, params.window) + 8;
        detail::iterated_resort(work, x, to, source, params.window,
                                /*recenter=*/true, passes, stats);
    }
}

}  // namespace

std::string SortEvents::to_csv() const {
    return "window_violations:" + std::to_string(window_violations) +
           ";element_exhaustions:" + std::to_string(element_exhaustions);
}

int insert_coarse(const std::vector<int>& current, int x, ComparisonSource& source,
                  int block_len) {
    if (block_len < 1) throw std::invalid_argument("insert_coarse: block_len must be positive");
    const int m = static_cast<int>(current.size());
    int pos = 0;
    for (int start = 0; start < m; start += block_len) {
        const int stop = std::min(m, start + block_len);
        int sum = 0;
        for (int i = start; i < stop; ++i) sum += source.compare(x, current[i]);
        if (sum > 0) pos = stop;  // tie counts as "x smaller"
    }
    return pos;
}

InsertionResult noisy_sort_insertion(ComparisonSource& source, const NswrParams& params,
                                     const Ranking* truth) {
    params.validate();
    const int n = source.items();
    if (truth && truth->size() != n)
        throw std::invalid_argument("noisy_sort_insertion: truth size mismatch");

    InsertionResult result;
    if (n == 0) {
        result.ranking = Ranking::identity(0);
        result.score = 0;
        return result;
    }

    const std::vector<int> chain = detail::insertion_chain(n, params.seed);
    detail::TruthTracker tracker(truth, n);

    std::vector<int> work;
    work.reserve(n);
    int next_sweep = 16;
    for (const int x : chain) {
        int pos = insert_coarse(work, x, source, params.block_len);
        if (params.localized) {
            // The block rule comes in at a block end, up to half a block off,
            // and the window-limited re-sort cannot ferry an element that far
            // through a fixed noisy table. The agreement scan re-reads the
            // comparisons the block pass already consumed and lands within
            // the re-sort's reach.
            pos = detail::max_agreement_position(work, x, source, pos);
        }
        work.insert(work.begin() + pos, x);

        const int len = static_cast<int>(work.size());
        if (params.localized) {
            const int passes = len / std::max(1, params.window) + 8;
            detail::iterated_resort(work, x, pos, source, params.window,
                                    /*recenter=*/true, passes, result.dp_stats);
            if (len >= next_sweep || len == n) {
                while (next_sweep <= len) next_sweep *= 2;
                resettle_sweep(work, source, params, result.dp_stats);
            }
        } else {
            detail::accumulate(result.dp_stats,
                               detail::resort_range(work, 0, len, source, params.window));
        }

        if (tracker.active()) {
            tracker.insert(x);
            if (tracker.max_dislocation(work) > params.window) ++result.events.window_violations;
        }
    }

    result.ranking = Ranking::from_order(work);
    result.score = score(source, result.ranking);
    return result;
}

InsertionResult noisy_sort_insertion(const QueryTable& q, const NswrParams& params,
                                     const Ranking* truth) {
    TableSource src(q);
    return noisy_sort_insertion(src, params, truth);
}

}  // namespace nswr
