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

// Internals shared by the two insertion pipelines. Not installed.

#ifndef NSWR_SRC_PIPELINE_COMMON_HPP
#define NSWR_SRC_PIPELINE_COMMON_HPP

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "nswr/oracle.hpp"
#include "nswr/ranking.hpp"
#include "nswr/rng.hpp"
#include "nswr/window_dp.hpp"

namespace nswr::detail {

// The seeded uniformly random insertion order.
inline std::vector<int> insertion_chain(int n, std::uint64_t seed) {
    std::vector<int> items(n);
    std::iota(items.begin(), items.end(), 0);
    SplitMix64 rng(seed);
    shuffle(items, rng);
    return items;
}

inline void accumulate(WindowDpStats& into, const WindowDpStats& s) {
    into.intervals += s.intervals;
    into.max_candidate_sets = std::max(into.max_candidate_sets, s.max_candidate_sets);
    into.total_candidate_sets += s.total_candidate_sets;
    into.split_evaluations += s.split_evaluations;
    into.cross_word_ops += s.cross_word_ops;
}

// Re-sorts work[begin, end) in place with the windowed DP and returns its
// work counters. Pairs outside the slice keep their relative order, so the
// whole-list score change equals the DP's (nonnegative) improvement.
inline WindowDpStats resort_range(std::vector<int>& work, int begin, int end,
                                  ComparisonSource& base, int window) {
    const int len = end - begin;
    if (len <= 1) return {};
    std::vector<int> slice(work.begin() + begin, work.begin() + end);
    SubsetSource sub(base, slice);
    PresortedResult res = sort_presorted(sub, Ranking::identity(len), window);
    for (int p = 0; p < len; ++p) work[begin + p] = slice[res.ranking.item_at(p)];
    return res.stats;
}

// Position of x in the working order maximizing agreement with the recorded
// comparisons: coming in at position k agrees with "x larger" answers below
// k and "x smaller" answers at or above k. insert_coarse has already asked x
// against every listed element, so on a no-resampling source this scan
// consumes no comparisons that were not already paid for. Ties break toward
// the coarse position `anchor`, then toward the lower slot. With noise
// advantage gamma the agreement maximum sits within O(1/gamma) of the true
// level, far inside the re-sort window's reach, and a lone far-off block
// majority cannot drag it anywhere.
inline int max_agreement_position(const std::vector<int>& work, int x, ComparisonSource& base,
                                  int anchor) {
    const int len = static_cast<int>(work.size());
    int agree = 0;
    for (int i = 0; i < len; ++i)
        if (base.compare(x, work[i]) < 0) ++agree;  // slot 0: every "smaller" agrees
    int best = agree, best_at = 0;
    for (int k = 1; k <= len; ++k) {
        agree += base.compare(x, work[k - 1]);
        if (agree > best ||
            (agree == best && std::abs(k - anchor) < std::abs(best_at - anchor))) {
            best = agree;
            best_at = k;
        }
    }
    return best_at;
}

// Repairs the neighborhood of a fresh insertion. One window-w DP pass moves
// every element at most w ranks, which cannot absorb a coarse placement
// error spanning several blocks, so the slice DP is re-run until the slice
// stops changing or the new element stops moving. With `recenter` the slice
// follows the element as it migrates, so a badly placed element keeps
// moving toward its level at up to w ranks per pass; passes beyond the
// first are paid only while real movement happens. Without `recenter` the
// slice stays put, which caps movement at the slice radius but keeps the
// set of touched pairs fixed for query-billed callers. Returns the
// element's final position.
inline int iterated_resort(std::vector<int>& work, int x, int pos, ComparisonSource& base,
                           int window, bool recenter, int max_passes, WindowDpStats& stats) {
    const int len = static_cast<int>(work.size());
    int center = pos;
    int at = pos;
    for (int pass = 0; pass < max_passes; ++pass) {
        const int begin = std::max(0, center - 4 * window);
        const int end = std::min(len, center + 4 * window + 1);
        std::vector<int> before(work.begin() + begin, work.begin() + end);
        accumulate(stats, resort_range(work, begin, end, base, window));
        const bool changed = !std::equal(before.begin(), before.end(), work.begin() + begin);
        at = static_cast<int>(std::find(work.begin() + begin, work.begin() + end, x) -
                              work.begin());
        if (!changed || at == center) break;
        if (recenter) center = at;
    }
    return at;
}

// Tracks the truth restricted to the inserted items, for the per-step
// dislocation audit. No-op when truth is absent.
class TruthTracker {
public:
    TruthTracker(const Ranking* truth, int n) : truth_(truth) {
        if (truth_) {
            sorted_.reserve(n);
            pos_of_.assign(n, 0);
        }
    }

    bool active() const { return truth_ != nullptr; }

    void insert(int item) {
        if (!truth_) return;
        const auto at = std::lower_bound(
            sorted_.begin(), sorted_.end(), item,
            [&](int a, int b) { return truth_->rank_of(a) < truth_->rank_of(b); });
        sorted_.insert(at, item);
    }

    // Max |position in work - position in restricted truth|.
    int max_dislocation(const std::vector<int>& work) {
        for (std::size_t p = 0; p < sorted_.size(); ++p) pos_of_[sorted_[p]] = static_cast<int>(p);
        int worst = 0;
        for (std::size_t p = 0; p < work.size(); ++p)
            worst = std::max(worst, std::abs(static_cast<int>(p) - pos_of_[work[p]]));
        return worst;
    }

private:
    const Ranking* truth_;
    std::vector<int> sorted_;
    std::vector<int> pos_of_;
};

}  // namespace nswr::detail

#endif  // NSWR_SRC_PIPELINE_COMMON_HPP
