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

#ifndef NSWR_PARAMS_HPP
#define NSWR_PARAMS_HPP

#include <cstdint>

namespace nswr {

/// Tuning knobs of the insertion sorters. The worst-case theory sizes these
/// as large multiples of log n; defaults_for() picks empirically calibrated
/// values that behave at desk scale.
struct NswrParams {
    double gamma = 0.25;        // noise advantage the run is calibrated for
    int window = 3;             // per-element window of the re-sort DP
    int block_len = 16;         // coarse-insertion block length
    int majority_k = 15;        // comparisons per majority test in the tree walk
    int walk_steps = 24;        // tree-walk length
    int interval_len_min = 24;  // partition bounds for the tree walk
    int interval_len_max = 48;
    int trim = 4;               // elements dropped from each end of neighbor intervals
    double beta = 1.0;          // target failure exponent n^-beta
    std::uint64_t seed = 0;
    bool localized = false;     // re-sort only a window*4 radius around insertions

    /// Throws std::invalid_argument unless gamma is in (0, 1/2], beta > 0,
    /// window, block_len, walk_steps >= 1, majority_k >= 1 and odd,
    /// 3 <= interval_len_min <= interval_len_max <= 2*interval_len_min, and
    /// 1 <= trim with 2*trim < interval_len_min.
    void validate() const;

    /// Calibrated defaults. Small n get window = n (the re-sort is then the
    /// exact full-window DP); block_len comes from a binomial-tail scan that
    /// keeps the expected number of stray block majorities per run below 0.1;
    /// the walk knobs are sized lean (majority_k with per-test error <= 16%,
    /// intervals of log2(n), walks of tree depth + 5) so the query-efficient
    /// pipeline stays within its distinct-query budget; the walk absorbs the
    /// higher per-test error by backtracking. Localized re-sorting switches
    /// on above ~120 items.
    static NswrParams defaults_for(int n, double gamma, std::uint64_t seed);
};

}  // namespace nswr

#endif  // NSWR_PARAMS_HPP
